//! The JSON game document.
//!
//! ```json
//! { "players": 5, "kind": "mwc", "mwc": [[1, 2], [1, 3], [3, 4]] }
//! { "players": ["a", "b", "c"], "kind": "weighted", "weights": [2, 1, 1], "quota": 3 }
//! ```
//!
//! Player indices are 1-based. `players` is either a count or a list of
//! unique labels.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::Error;
use crate::family::SetFamily;
use crate::game::{SimpleGame, WeightedGame};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PlayerSpec {
    Count(usize),
    Labels(Vec<String>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    Mwc,
    Weighted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub players: PlayerSpec,
    pub kind: GameKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mwc: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quota: Option<u64>,
}

/// A parse or validation failure, located by line/column for syntax errors
/// and by field path for validation errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
}

impl ParseError {
    fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
            line: None,
            column: None,
            field: Some(field.into()),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.field, self.line, self.column) {
            (Some(field), _, _) => write!(f, "{field}: {}", self.message),
            (None, Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGame {
    pub document: GameDocument,
    pub warnings: Vec<String>,
}

impl GameDocument {
    pub fn n(&self) -> usize {
        match &self.players {
            PlayerSpec::Count(n) => *n,
            PlayerSpec::Labels(l) => l.len(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        match &self.players {
            PlayerSpec::Count(_) => None,
            PlayerSpec::Labels(l) => Some(l),
        }
    }

    /// Labels for display: the document's own, or `1..=n`.
    pub fn display_labels(&self) -> Vec<String> {
        match &self.players {
            PlayerSpec::Count(n) => (1..=*n).map(|p| p.to_string()).collect(),
            PlayerSpec::Labels(l) => l.clone(),
        }
    }

    pub fn weighted(&self) -> Option<WeightedGame> {
        match (self.kind, &self.weights, self.quota) {
            (GameKind::Weighted, Some(w), Some(q)) => WeightedGame::new(w.clone(), q).ok(),
            _ => None,
        }
    }

    /// The game this document describes. Weighted documents enumerate their
    /// minimal winning coalitions, so check the enumeration cap first.
    pub fn to_game(&self) -> Result<SimpleGame, Error> {
        let n = self.n();
        match self.kind {
            GameKind::Weighted => Ok(WeightedGame::new(
                self.weights.clone().unwrap_or_default(),
                self.quota.unwrap_or(0),
            )?
            .to_simple()),
            GameKind::Mwc => {
                let sets = self
                    .mwc
                    .iter()
                    .flatten()
                    .map(|s| Coalition::from_labels(n, s.iter().copied()))
                    .collect::<Result<Vec<_>, _>>()?;
                SimpleGame::from_winning(n, sets)
            }
        }
    }

    /// A `kind: mwc` document for `game`, keeping these players' labels.
    pub fn from_game(players: PlayerSpec, game: &SimpleGame) -> Self {
        GameDocument {
            players,
            kind: GameKind::Mwc,
            mwc: Some(game.mwc().iter().map(|c| c.labels()).collect()),
            weights: None,
            quota: None,
        }
    }

    /// One field per line, each coalition on a single line.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("document serializes");
        let serde_json::Value::Object(fields) = value else {
            unreachable!("documents serialize as objects")
        };
        let lines: Vec<String> = fields
            .iter()
            .map(|(key, v)| {
                let rendered = match v {
                    serde_json::Value::Array(items) if items.iter().any(|x| x.is_array()) => {
                        let rows: Vec<String> = items.iter().map(|x| format!("    {x}")).collect();
                        format!("[\n{}\n  ]", rows.join(",\n"))
                    }
                    other => other.to_string(),
                };
                format!("  {}: {rendered}", serde_json::Value::from(key.as_str()))
            })
            .collect();
        format!("{{\n{}\n}}", lines.join(",\n"))
    }
}

pub fn parse_game(text: &[u8]) -> Result<ParsedGame, ParseError> {
    let text = std::str::from_utf8(text).map_err(|e| ParseError {
        message: format!("input is not UTF-8: {e}"),
        line: None,
        column: None,
        field: None,
    })?;
    let document: GameDocument = serde_json::from_str(text).map_err(|e| ParseError {
        message: e.to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
        field: None,
    })?;
    validate(document)
}

fn validate(mut doc: GameDocument) -> Result<ParsedGame, ParseError> {
    let n = doc.n();
    if n == 0 || n > MAX_PLAYERS {
        return Err(ParseError::field(
            "players",
            format!("player count {n} is outside 1..={MAX_PLAYERS}"),
        ));
    }
    if let PlayerSpec::Labels(labels) = &doc.players {
        let mut seen = HashSet::new();
        for (k, l) in labels.iter().enumerate() {
            if l.trim().is_empty() {
                return Err(ParseError::field(format!("players[{k}]"), "empty label"));
            }
            if !seen.insert(l.as_str()) {
                return Err(ParseError::field(
                    format!("players[{k}]"),
                    format!("duplicate label `{l}`"),
                ));
            }
        }
    }

    let mut warnings = Vec::new();
    match doc.kind {
        GameKind::Mwc => {
            if doc.weights.is_some() || doc.quota.is_some() {
                return Err(ParseError::field(
                    "kind",
                    "`weights`/`quota` are only allowed with kind \"weighted\"",
                ));
            }
            let Some(sets) = doc.mwc.take() else {
                return Err(ParseError::field("mwc", "missing for kind \"mwc\""));
            };
            if sets.is_empty() {
                return Err(ParseError::field("mwc", "at least one coalition is required"));
            }
            let mut coalitions = Vec::with_capacity(sets.len());
            for (k, s) in sets.iter().enumerate() {
                if s.is_empty() {
                    return Err(ParseError::field(format!("mwc[{k}]"), "empty coalition"));
                }
                let mut bits = 0u64;
                for (m, &label) in s.iter().enumerate() {
                    if label == 0 || label > n {
                        return Err(ParseError::field(
                            format!("mwc[{k}][{m}]"),
                            format!("player {label} is outside 1..={n}"),
                        ));
                    }
                    if bits >> (label - 1) & 1 == 1 {
                        return Err(ParseError::field(
                            format!("mwc[{k}][{m}]"),
                            format!("player {label} repeated"),
                        ));
                    }
                    bits |= 1 << (label - 1);
                }
                coalitions.push(Coalition::from_bits(n, bits).expect("labels checked"));
            }
            let minimal = SetFamily::new(n, coalitions.iter().copied())
                .expect("same player count")
                .min_sets();
            let mut kept = Vec::with_capacity(sets.len());
            let mut seen = HashSet::new();
            for (k, (s, c)) in sets.into_iter().zip(&coalitions).enumerate() {
                if !seen.insert(*c) {
                    warnings.push(format!("mwc[{k}]: duplicate coalition {c} removed"));
                } else if !minimal.contains(c) {
                    let inner = minimal.iter().find(|m| m.is_strict_subset(c)).unwrap();
                    warnings.push(format!(
                        "mwc[{k}]: {c} contains winning coalition {inner}; removed"
                    ));
                } else {
                    kept.push(s);
                }
            }
            doc.mwc = Some(kept);
        }
        GameKind::Weighted => {
            if doc.mwc.is_some() {
                return Err(ParseError::field(
                    "mwc",
                    "only allowed with kind \"mwc\"",
                ));
            }
            let Some(weights) = &doc.weights else {
                return Err(ParseError::field("weights", "missing for kind \"weighted\""));
            };
            let Some(quota) = doc.quota else {
                return Err(ParseError::field("quota", "missing for kind \"weighted\""));
            };
            if weights.len() != n {
                return Err(ParseError::field(
                    "weights",
                    format!("expected {n} weights, got {}", weights.len()),
                ));
            }
            if quota == 0 {
                return Err(ParseError::field(
                    "quota",
                    "must be positive (the empty coalition would win)",
                ));
            }
            let total: u128 = weights.iter().map(|&w| w as u128).sum();
            if total < quota as u128 {
                return Err(ParseError::field(
                    "quota",
                    format!("{quota} is unreachable: total weight is {total}"),
                ));
            }
        }
    }
    Ok(ParsedGame {
        document: doc,
        warnings,
    })
}

/// Parses `--weights a,b,c` and pairs it with `--quota`.
pub fn weighted_document(weights: &str, quota: u64) -> Result<ParsedGame, ParseError> {
    let weights = parse_weights_flag(weights)?;
    validate(GameDocument {
        players: PlayerSpec::Count(weights.len()),
        kind: GameKind::Weighted,
        mwc: None,
        weights: Some(weights),
        quota: Some(quota),
    })
}

pub fn parse_weights_flag(text: &str) -> Result<Vec<u64>, ParseError> {
    text.split(',')
        .enumerate()
        .map(|(k, w)| {
            w.trim().parse::<u64>().map_err(|e| {
                ParseError::field(
                    format!("--weights[{k}]"),
                    format!("`{}` is not a non-negative integer ({e})", w.trim()),
                )
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE1: &str = r#"{
  "players": 5,
  "kind": "mwc",
  "mwc": [[1, 2], [1, 3], [3, 4], [2, 4, 5], [1, 4, 5]]
}"#;

    fn err(text: &str) -> ParseError {
        parse_game(text.as_bytes()).unwrap_err()
    }

    #[test]
    fn parses_example1() {
        let p = parse_game(EXAMPLE1.as_bytes()).unwrap();
        assert!(p.warnings.is_empty());
        assert_eq!(p.document.n(), 5);
        assert_eq!(p.document.to_game().unwrap().mwc().len(), 5);
    }

    #[test]
    fn parses_weighted() {
        let p = parse_game(br#"{"players": 5, "kind": "weighted", "weights": [4,2,1,1,1], "quota": 6}"#)
            .unwrap();
        assert_eq!(p.document.to_game().unwrap().mwc().len(), 4);
        assert!(p.document.weighted().is_some());
    }

    #[test]
    fn minimizes_with_warning() {
        let p = parse_game(br#"{"players": 3, "kind": "mwc", "mwc": [[1,2],[1,2,3],[1,2]]}"#).unwrap();
        assert_eq!(p.document.mwc, Some(vec![vec![1, 2]]));
        assert_eq!(p.warnings.len(), 2);
        assert!(p.warnings[0].contains("{1,2,3}"));
    }

    #[test]
    fn round_trips_modulo_whitespace() {
        let p = parse_game(EXAMPLE1.as_bytes()).unwrap();
        let strip = |s: &str| s.split_whitespace().collect::<String>();
        assert_eq!(strip(&p.document.to_json()), strip(EXAMPLE1));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let e = err("{\n  \"players\": 5,\n  \"kind\": }");
        assert_eq!(e.line, Some(3));
        assert!(e.to_string().starts_with("line 3"));
        assert!(err("{\"players\": 2, \"kind\": \"mwc\", \"mwc\": [[1]], \"extra\": 1}")
            .message
            .contains("unknown field"));
    }

    #[test]
    fn validation_errors_carry_field() {
        let cases = [
            (r#"{"players": ["a","a"], "kind": "mwc", "mwc": [[1]]}"#, "players[1]"),
            (r#"{"players": 3, "kind": "mwc", "mwc": [[1],[4]]}"#, "mwc[1][0]"),
            (r#"{"players": 3, "kind": "mwc", "mwc": [[1],[]]}"#, "mwc[1]"),
            (r#"{"players": 3, "kind": "mwc", "mwc": []}"#, "mwc"),
            (r#"{"players": 3, "kind": "mwc", "mwc": [[1,1]]}"#, "mwc[0][1]"),
            (r#"{"players": 3, "kind": "weighted", "weights": [1,1,1], "quota": 4}"#, "quota"),
            (r#"{"players": 3, "kind": "weighted", "weights": [1,1,1], "quota": 0}"#, "quota"),
            (r#"{"players": 3, "kind": "weighted", "weights": [1,1], "quota": 1}"#, "weights"),
            (r#"{"players": 0, "kind": "mwc", "mwc": [[1]]}"#, "players"),
            (r#"{"players": 3, "kind": "mwc"}"#, "mwc"),
        ];
        for (text, field) in cases {
            assert_eq!(err(text).field.as_deref(), Some(field), "{text}");
        }
    }

    #[test]
    fn weights_flag() {
        assert_eq!(parse_weights_flag("4, 2,1").unwrap(), vec![4, 2, 1]);
        assert_eq!(
            parse_weights_flag("4,x").unwrap_err().field.as_deref(),
            Some("--weights[1]")
        );
        assert!(weighted_document("1,1", 3).is_err());
        assert_eq!(weighted_document("4,2,1,1,1", 6).unwrap().document.n(), 5);
    }
}
