//! The desirability relation between individual players.
//!
//! `i ⪰ j` holds when swapping `j` for `i` never turns a winning coalition
//! losing. Checking it only needs the minimal winning coalitions: if some
//! `S ∪ {j}` wins while `S ∪ {i}` loses, a minimal winning `M ⊆ S ∪ {j}` must
//! contain `j` and not `i`, and `(M \ {j}) ∪ {i} ⊆ S ∪ {i}` loses as well.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::SimpleGame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PairRelation {
    /// `i ≻ j`
    StrictlyMore,
    /// `i ∼ j`
    Equivalent,
    /// `j ≻ i`
    StrictlyLess,
    Incomparable,
}

impl PairRelation {
    fn from_weak(i_over_j: bool, j_over_i: bool) -> Self {
        match (i_over_j, j_over_i) {
            (true, true) => PairRelation::Equivalent,
            (true, false) => PairRelation::StrictlyMore,
            (false, true) => PairRelation::StrictlyLess,
            (false, false) => PairRelation::Incomparable,
        }
    }

    /// The relation seen from the other player.
    pub fn flip(self) -> Self {
        match self {
            PairRelation::StrictlyMore => PairRelation::StrictlyLess,
            PairRelation::StrictlyLess => PairRelation::StrictlyMore,
            other => other,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PairRelation::StrictlyMore => ">",
            PairRelation::Equivalent => "~",
            PairRelation::StrictlyLess => "<",
            PairRelation::Incomparable => "#",
        }
    }
}

impl fmt::Display for PairRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

fn check_pair(game: &SimpleGame, i: usize, j: usize) -> Result<()> {
    game.check_player(i)?;
    game.check_player(j)?;
    if i == j {
        return Err(Error::SamePlayer(i));
    }
    Ok(())
}

fn weak_unchecked(game: &SimpleGame, i: usize, j: usize) -> bool {
    let (bi, bj) = (1u64 << i, 1u64 << j);
    game.mwc()
        .iter()
        .map(|m| m.bits())
        .filter(|&m| m & bj != 0 && m & bi == 0)
        .all(|m| game.is_winning_bits(m & !bj | bi))
}

/// `i ⪰ j`, decided from the minimal winning coalitions.
pub fn weakly_desirable(game: &SimpleGame, i: usize, j: usize) -> Result<bool> {
    check_pair(game, i, j)?;
    Ok(weak_unchecked(game, i, j))
}

pub fn classify_pair(game: &SimpleGame, i: usize, j: usize) -> Result<PairRelation> {
    check_pair(game, i, j)?;
    Ok(PairRelation::from_weak(
        weak_unchecked(game, i, j),
        weak_unchecked(game, j, i),
    ))
}

/// Row-major `n × n` table of pair relations; the diagonal is `Equivalent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesirabilityMatrix {
    n: usize,
    cells: Vec<PairRelation>,
}

impl DesirabilityMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> PairRelation {
        self.cells[i * self.n + j]
    }

    pub fn is_total(&self) -> bool {
        !self.cells.contains(&PairRelation::Incomparable)
    }

    /// `i ⪰ j` as recorded in the matrix.
    pub fn weakly(&self, i: usize, j: usize) -> bool {
        matches!(
            self.get(i, j),
            PairRelation::StrictlyMore | PairRelation::Equivalent
        )
    }

    pub fn rows(&self) -> impl Iterator<Item = &[PairRelation]> {
        self.cells.chunks(self.n)
    }
}

pub fn desirability_matrix(game: &SimpleGame) -> DesirabilityMatrix {
    let n = game.n();
    let mut cells = vec![PairRelation::Equivalent; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let rel = PairRelation::from_weak(weak_unchecked(game, i, j), weak_unchecked(game, j, i));
            cells[i * n + j] = rel;
            cells[j * n + i] = rel.flip();
        }
    }
    DesirabilityMatrix { n, cells }
}

pub fn is_total(matrix: &DesirabilityMatrix) -> bool {
    matrix.is_total()
}
