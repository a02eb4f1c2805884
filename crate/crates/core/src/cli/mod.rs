//! Command-line front end. `run` does all the work so it can be driven from
//! tests; the binary only forwards `std::env::args_os` and the exit code.
//!
//! Exit codes: 0 ok, 1 axiom violation found, 2 usage or cap error, 3 parse
//! error.

pub mod document;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::axioms::{run_suite, AxiomInstances, RankingSolution, Solution, SuiteReport};
use crate::desirability::desirability_matrix;
use crate::game::{check_enumeration_cap, SimpleGame};
use crate::rankings::{criticality_ranking, dpi, lpgr, pgi, ranking_from_scores, Ranking};

pub use document::{parse_game, GameDocument, GameKind, ParseError, ParsedGame, PlayerSpec};
pub use report::{analyze, AnalysisReport, RankingView};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Environment variable equivalent of `--force`.
pub const FORCE_ENV: &str = "SIMPLEGAMES_FORCE";

#[derive(Debug, Parser)]
#[command(name = "simplegames", version, about = "Analyze simple (voting) games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RankMethod {
    Lpgr,
    Criticality,
    Pgi,
    Dpi,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Game document (JSON). Omit when using --weights/--quota.
    pub file: Option<PathBuf>,

    /// Comma-separated integer weights of a weighted majority game.
    #[arg(long, requires = "quota", conflicts_with = "file")]
    pub weights: Option<String>,

    /// Quota of the weighted majority game.
    #[arg(long, requires = "weights")]
    pub quota: Option<u64>,

    /// Allow enumeration above the player cap.
    #[arg(long, env = FORCE_ENV)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: coalitions, profiles, indices, rankings, desirability.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Rank players with one method.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        method: RankMethod,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the dual game as an mwc document.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// List minimal winning coalitions.
    Mwc {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List minimal blocking coalitions.
    Blocking {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print the desirability relation.
    Desirability {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check DM on the game and AMWC/ILMWC on sampled transformations.
    Axioms {
        #[command(flatten)]
        input: Input,
        /// lpgr, criticality, pgi, dpi, r-dm, r-amwc or r-ilmwc.
        #[arg(long)]
        solution: Solution,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

impl clap::builder::ValueParserFactory for Solution {
    type Parser = clap::builder::ValueParser;

    fn value_parser() -> Self::Parser {
        clap::builder::ValueParser::new(|s: &str| s.parse::<Solution>())
    }
}

/// A failure that maps onto an exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// A loaded game together with the document it came from.
pub struct Loaded {
    pub document: GameDocument,
    pub game: SimpleGame,
    pub warnings: Vec<String>,
}

pub fn load(input: &Input) -> Result<Loaded, Failure> {
    let parsed = match (&input.file, &input.weights, input.quota) {
        (Some(path), None, None) => {
            let bytes = std::fs::read(path).map_err(|e| {
                Failure::usage(format!("cannot read {}: {e}", path.display()))
            })?;
            parse_game(&bytes)
        }
        (None, Some(w), Some(q)) => document::weighted_document(w, q),
        _ => return Err(Failure::usage("give a game file or --weights with --quota")),
    }
    .map_err(|e| Failure {
        code: EXIT_PARSE,
        message: match &input.file {
            Some(p) => format!("{}: {e}", p.display()),
            None => e.to_string(),
        },
    })?;
    let document = parsed.document;
    check_enumeration_cap(document.n(), input.force)
        .map_err(|e| Failure::usage(e.to_string()))?;
    let game = document.to_game().map_err(|e| Failure {
        code: EXIT_PARSE,
        message: e.to_string(),
    })?;
    Ok(Loaded {
        document,
        game,
        warnings: parsed.warnings,
    })
}

pub fn rank_with(method: RankMethod, game: &SimpleGame) -> Ranking {
    match method {
        RankMethod::Lpgr => lpgr(game),
        RankMethod::Criticality => criticality_ranking(game),
        RankMethod::Pgi => ranking_from_scores(&pgi(game)),
        RankMethod::Dpi => ranking_from_scores(&dpi(game)),
    }
}

pub fn cmd_analyze(loaded: &Loaded) -> AnalysisReport {
    analyze(&loaded.document, &loaded.game)
}

pub fn cmd_rank(loaded: &Loaded, method: RankMethod) -> Ranking {
    rank_with(method, &loaded.game)
}

pub fn cmd_dual(loaded: &Loaded) -> GameDocument {
    GameDocument::from_game(loaded.document.players.clone(), &loaded.game.dual())
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomsReport {
    pub seed: u64,
    pub trials: usize,
    #[serde(flatten)]
    pub suite: SuiteReport,
}

impl AxiomsReport {
    pub fn passed(&self) -> bool {
        self.suite.all_hold()
    }

    pub fn to_table(&self, labels: &[String]) -> String {
        let s = &self.suite;
        let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
        let name = |p: usize| labels[p].as_str();
        let mut out = format!("solution: {}\nseed: {}\n", s.solution, self.seed);
        out.push_str(&format!(
            "dm: {} ({} violations)\n",
            verdict(s.dm_holds()),
            s.dm_violations.len()
        ));
        for f in &s.dm_violations {
            out.push_str(&format!("  {}\n", f.violation));
        }
        out.push_str(&format!(
            "amwc: {} ({} of {} instances failed)\n",
            verdict(s.amwc_holds()),
            s.amwc_failures.len(),
            s.amwc_checked
        ));
        for f in &s.amwc_failures {
            out.push_str(&format!(
                "  pair ({}, {}) {:?} -> {:?} under {}\n",
                name(f.i),
                name(f.j),
                f.before,
                f.after,
                f.instance
            ));
        }
        out.push_str(&format!(
            "ilmwc: {} ({} of {} instances failed)\n",
            verdict(s.ilmwc_holds()),
            s.ilmwc_failures.len(),
            s.ilmwc_checked
        ));
        for f in &s.ilmwc_failures {
            out.push_str(&format!(
                "  pair ({}, {}) {:?} -> {:?} adding {}\n",
                name(f.i),
                name(f.j),
                f.before,
                f.after,
                f.instance
            ));
        }
        out
    }
}

pub fn cmd_axioms<S: RankingSolution + ?Sized>(
    loaded: &Loaded,
    solution: &S,
    seed: u64,
    trials: usize,
) -> AxiomsReport {
    let games = std::slice::from_ref(&loaded.game);
    let instances = AxiomInstances::sample(games, seed, trials);
    AxiomsReport {
        seed,
        trials,
        suite: run_suite(solution, games, &instances),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let input = match command {
        Command::Analyze { input, .. }
        | Command::Rank { input, .. }
        | Command::Dual { input }
        | Command::Mwc { input, .. }
        | Command::Blocking { input, .. }
        | Command::Desirability { input, .. }
        | Command::Axioms { input, .. } => input,
    };
    let loaded = load(input)?;
    for w in &loaded.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let labels = loaded.document.display_labels();
    let mut code = EXIT_OK;
    let text = match command {
        Command::Analyze { format, .. } => {
            let report = cmd_analyze(&loaded);
            match format {
                Format::Table => report.to_table(),
                Format::Json => report.to_json(),
            }
        }
        Command::Rank { method, format, .. } => {
            let view = RankingView::new(&cmd_rank(&loaded, *method), &labels);
            match format {
                Format::Table => format!("{}\n", view.text),
                Format::Json => json(&view),
            }
        }
        Command::Dual { .. } => {
            let mut s = cmd_dual(&loaded).to_json();
            s.push('\n');
            s
        }
        Command::Mwc { format, .. } | Command::Blocking { format, .. } => {
            let (title, family) = match command {
                Command::Mwc { .. } => ("minimal winning coalitions", loaded.game.mwc().clone()),
                _ => ("minimal blocking coalitions", loaded.game.minimal_blocking()),
            };
            let sets = report::family_labels(&family);
            match format {
                Format::Table => report::render_family(title, &sets, &labels),
                Format::Json => json(&sets),
            }
        }
        Command::Desirability { format, .. } => {
            let matrix = desirability_matrix(&loaded.game);
            let rows = report::matrix_rows(&matrix);
            match format {
                Format::Table => format!(
                    "{}total: {}\n",
                    report::render_matrix(&rows, &labels),
                    if matrix.is_total() { "yes" } else { "no" }
                ),
                Format::Json => json(&serde_json::json!({
                    "players": labels,
                    "relation": rows,
                    "total": matrix.is_total(),
                })),
            }
        }
        Command::Axioms {
            solution,
            seed,
            trials,
            format,
            ..
        } => {
            let report = cmd_axioms(&loaded, solution, *seed, *trials);
            if !report.passed() {
                code = EXIT_VIOLATION;
            }
            match format {
                Format::Table => report.to_table(&labels),
                Format::Json => json(&report),
            }
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(format!("cannot write output: {e}")))?;
    Ok(code)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
