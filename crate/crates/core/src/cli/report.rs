use serde::Serialize;

use crate::desirability::{desirability_matrix, DesirabilityMatrix, PairRelation};
use crate::family::SetFamily;
use crate::game::SimpleGame;
use crate::rankings::{
    criticality_ranking, dpi, lpgr, pgi, ranking_from_scores, theta_profile, ExactRational,
    Ranking, ThetaKind,
};

use super::document::GameDocument;

/// A ranking as 1-based classes plus its one-line rendering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankingView {
    pub classes: Vec<Vec<usize>>,
    pub text: String,
}

impl RankingView {
    pub fn new(ranking: &Ranking, labels: &[String]) -> Self {
        RankingView {
            classes: ranking
                .classes()
                .iter()
                .map(|c| c.iter().map(|p| p + 1).collect())
                .collect(),
            text: ranking.render(Some(labels)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub game: GameDocument,
    pub players: Vec<String>,
    pub mwc: Vec<Vec<usize>>,
    pub blocking: Vec<Vec<usize>>,
    pub theta: Vec<Vec<u64>>,
    pub theta_star: Vec<Vec<u64>>,
    pub pgi: Vec<ExactRational>,
    pub dpi: Vec<ExactRational>,
    pub lpgr: RankingView,
    pub criticality: RankingView,
    pub pgi_ranking: RankingView,
    pub dpi_ranking: RankingView,
    pub desirability: Vec<Vec<PairRelation>>,
    pub total: bool,
}

pub(crate) fn family_labels(family: &SetFamily) -> Vec<Vec<usize>> {
    family.iter().map(|c| c.labels()).collect()
}

pub fn analyze(document: &GameDocument, game: &SimpleGame) -> AnalysisReport {
    let labels = document.display_labels();
    let blocking = game.minimal_blocking();
    let matrix = desirability_matrix(game);
    let counts = |kind, family: &SetFamily| -> Vec<Vec<u64>> {
        theta_profile(family, kind)
            .into_iter()
            .map(|t| t.counts)
            .collect()
    };
    let pgi = pgi(game);
    let dpi = dpi(game);
    AnalysisReport {
        game: document.clone(),
        mwc: family_labels(game.mwc()),
        blocking: family_labels(&blocking),
        theta: counts(ThetaKind::Winning, game.mwc()),
        theta_star: counts(ThetaKind::Blocking, &blocking),
        lpgr: RankingView::new(&lpgr(game), &labels),
        criticality: RankingView::new(&criticality_ranking(game), &labels),
        pgi_ranking: RankingView::new(&ranking_from_scores(&pgi), &labels),
        dpi_ranking: RankingView::new(&ranking_from_scores(&dpi), &labels),
        pgi,
        dpi,
        desirability: matrix.rows().map(|r| r.to_vec()).collect(),
        total: matrix.is_total(),
        players: labels,
    }
}

fn braces(sets: &[Vec<usize>], labels: &[String]) -> String {
    sets.iter()
        .map(|s| {
            let inner: Vec<&str> = s.iter().map(|&p| labels[p - 1].as_str()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn vector(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Left-aligned columns separated by two spaces, no trailing whitespace.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_family(title: &str, sets: &[Vec<usize>], labels: &[String]) -> String {
    format!("{title} ({}): {}\n", sets.len(), braces(sets, labels))
}

pub fn render_matrix(matrix: &[Vec<PairRelation>], labels: &[String]) -> String {
    let mut rows = vec![std::iter::once(String::new())
        .chain(labels.iter().cloned())
        .collect::<Vec<_>>()];
    for (i, row) in matrix.iter().enumerate() {
        rows.push(
            std::iter::once(labels[i].clone())
                .chain(row.iter().map(|r| r.symbol().to_string()))
                .collect(),
        );
    }
    table(&rows)
}

pub fn matrix_rows(matrix: &DesirabilityMatrix) -> Vec<Vec<PairRelation>> {
    matrix.rows().map(|r| r.to_vec()).collect()
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let labels = &self.players;
        let mut out = String::new();
        out.push_str(&format!("players: {}\n", labels.join(" ")));
        out.push_str(&render_family("minimal winning coalitions", &self.mwc, labels));
        out.push_str(&render_family("minimal blocking coalitions", &self.blocking, labels));
        out.push('\n');

        let mut rows = vec![["player", "theta", "theta*", "pgi", "dpi"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()];
        for (p, label) in labels.iter().enumerate() {
            rows.push(vec![
                label.clone(),
                vector(&self.theta[p]),
                vector(&self.theta_star[p]),
                self.pgi[p].to_string(),
                self.dpi[p].to_string(),
            ]);
        }
        out.push_str(&table(&rows));
        out.push('\n');

        let rankings = [
            ("lpgr:", &self.lpgr),
            ("criticality:", &self.criticality),
            ("pgi:", &self.pgi_ranking),
            ("dpi:", &self.dpi_ranking),
        ];
        let rows: Vec<Vec<String>> = rankings
            .iter()
            .map(|(name, view)| vec![name.to_string(), view.text.clone()])
            .collect();
        out.push_str(&table(&rows));
        out.push('\n');

        out.push_str("desirability:\n");
        out.push_str(&render_matrix(&self.desirability, labels));
        out.push_str(&format!("total: {}\n", if self.total { "yes" } else { "no" }));
        out
    }
}
