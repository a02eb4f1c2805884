//! Analysis of simple (voting) games.
//!
//! A [`SimpleGame`] is stored as its antichain of minimal winning
//! coalitions. From it the crate derives minimal blocking coalitions and the
//! dual game, the desirability relation between players, the Public Good and
//! Deegan-Packel indices as exact fractions, and two lexicographic rankings:
//! [`lpgr`], which compares players by how many minimal winning coalitions of
//! each size they belong to (smallest sizes first), and
//! [`criticality_ranking`], which does the same over minimal blocking
//! coalitions.
//!
//! The [`axioms`] module checks ranking solutions against desirable
//! monotonicity, anonymity of minimal winning coalitions and independence of
//! larger minimal winning coalitions.
//!
//! ```
//! use simplegames::{lpgr, WeightedGame};
//!
//! let game = WeightedGame::new(vec![4, 2, 1, 1, 1], 6).unwrap().to_simple();
//! assert_eq!(lpgr(&game).to_string(), "1 > 2 > 3 = 4 = 5");
//! ```

pub mod axioms;
pub mod cli;
pub mod coalition;
pub mod corpus;
pub mod desirability;
pub mod error;
pub mod family;
pub mod game;
pub mod rankings;

pub use coalition::Coalition;
pub use desirability::{
    classify_pair, desirability_matrix, is_total, weakly_desirable, DesirabilityMatrix,
    PairRelation,
};
pub use error::{Error, Result};
pub use family::{min_sets, SetFamily};
pub use game::{
    dual, game_from_weighted, is_winning, minimal_blocking, SimpleGame, WeightedGame,
};
pub use rankings::{
    criticality_ranking, dpi, lex_compare, lpgr, pgi, ranking_from_scores, theta, theta_star,
    ExactRational, Ranking, ThetaKind, ThetaVector,
};
