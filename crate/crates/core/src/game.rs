//! Simple games in minimal-winning-coalition form, weighted majority games,
//! minimal blocking coalitions and duals.
//!
//! A game is stored only as its antichain of minimal winning coalitions; a
//! coalition wins iff it contains one of them. Nothing here builds a `2^n`
//! table, but minimal blocking coalitions and weighted-game enumeration are
//! still exponential in the worst case, so callers facing untrusted input
//! should go through [`check_enumeration_cap`] first.

use std::fmt;

use crate::coalition::{check_player_count, full_mask, Coalition};
use crate::error::{Error, Result};
use crate::family::SetFamily;

/// Largest player count the enumeration routines accept without an explicit
/// override.
pub const DEFAULT_ENUMERATION_CAP: usize = 28;

pub fn check_enumeration_cap(n: usize, force: bool) -> Result<()> {
    if !force && n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: DEFAULT_ENUMERATION_CAP,
        });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGame {
    n: usize,
    mwc: SetFamily,
}

impl SimpleGame {
    /// Builds a game from its minimal winning coalitions, which must form a
    /// non-empty antichain without the empty coalition.
    pub fn from_mwc<I: IntoIterator<Item = Coalition>>(n: usize, mwc: I) -> Result<Self> {
        SimpleGame::from_family(SetFamily::antichain(n, mwc)?)
    }

    /// Builds a game from any generating family of winning coalitions; the
    /// family is minimized first.
    pub fn from_winning<I: IntoIterator<Item = Coalition>>(n: usize, winning: I) -> Result<Self> {
        SimpleGame::from_family(SetFamily::new(n, winning)?.min_sets())
    }

    pub fn from_family(family: SetFamily) -> Result<Self> {
        if !family.is_antichain() {
            if let Some((sub, sup)) = family.strict_inclusion() {
                return Err(Error::NotAntichain {
                    subset: sub.to_string(),
                    superset: sup.to_string(),
                });
            }
        }
        if family.is_empty() {
            return Err(Error::NoWinningCoalition);
        }
        if family.iter().any(|c| c.is_empty()) {
            return Err(Error::EmptyWinningCoalition);
        }
        let n = family.n();
        let mwc = if family.is_antichain() {
            family
        } else {
            family.min_sets()
        };
        Ok(SimpleGame { n, mwc })
    }

    /// Convenience constructor from 1-based labels.
    pub fn from_labels(n: usize, mwc: &[&[usize]]) -> Result<Self> {
        let sets = mwc
            .iter()
            .map(|s| Coalition::from_labels(n, s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SimpleGame::from_mwc(n, sets)
    }

    /// The unanimity game: only `N` wins.
    pub fn unanimity(n: usize) -> Result<Self> {
        SimpleGame::from_mwc(n, [Coalition::grand(n)?])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mwc(&self) -> &SetFamily {
        &self.mwc
    }

    pub fn grand(&self) -> Coalition {
        Coalition::raw(self.n, full_mask(self.n))
    }

    #[inline]
    pub fn is_winning(&self, s: &Coalition) -> bool {
        debug_assert_eq!(s.n(), self.n);
        self.is_winning_bits(s.bits())
    }

    #[inline]
    pub fn is_winning_bits(&self, bits: u64) -> bool {
        self.mwc.iter().any(|m| m.bits() & !bits == 0)
    }

    /// `is_winning` with the dimension check surfaced as an error.
    pub fn check_winning(&self, s: &Coalition) -> Result<bool> {
        if s.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: s.n(),
            });
        }
        Ok(self.is_winning(s))
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.n {
            return Err(Error::PlayerOutOfRange { player, n: self.n });
        }
        Ok(())
    }

    /// Minimal blocking coalitions: the minimal `B` with `N \ B` losing.
    pub fn minimal_blocking(&self) -> SetFamily {
        minimal_blocking(self)
    }

    pub fn dual(&self) -> SimpleGame {
        dual(self)
    }
}

impl fmt::Debug for SimpleGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGame(n={}, mwc={})", self.n, self.mwc)
    }
}

/// Weighted majority game with exact integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGame {
    weights: Vec<u64>,
    quota: u64,
}

impl WeightedGame {
    pub fn new(weights: Vec<u64>, quota: u64) -> Result<Self> {
        check_player_count(weights.len())?;
        if quota == 0 {
            return Err(Error::ZeroQuota { quota });
        }
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        if total < quota as u128 {
            return Err(Error::UnreachableQuota { quota, total });
        }
        Ok(WeightedGame { weights, quota })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn quota(&self) -> u64 {
        self.quota
    }

    pub fn weight_of(&self, s: &Coalition) -> u128 {
        s.players().map(|p| self.weights[p] as u128).sum()
    }

    pub fn is_winning(&self, s: &Coalition) -> bool {
        self.weight_of(s) >= self.quota as u128
    }

    pub fn to_simple(&self) -> SimpleGame {
        game_from_weighted(self)
    }
}

/// Enumerates the minimal winning coalitions of a weighted game.
///
/// Players are visited by descending weight; a branch stops as soon as the
/// quota is met, and is pruned when the remaining weight cannot reach it.
/// With that visiting order the last player added is the lightest member, and
/// the coalition was losing before it joined, so every recorded coalition is
/// minimal and supersets of recorded coalitions are never visited.
pub fn game_from_weighted(wg: &WeightedGame) -> SimpleGame {
    let n = wg.n();
    let quota = wg.quota as u128;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| wg.weights[b].cmp(&wg.weights[a]).then(a.cmp(&b)));
    let weights: Vec<u128> = order.iter().map(|&p| wg.weights[p] as u128).collect();
    // suffix[k] = total weight of order[k..]
    let mut suffix = vec![0u128; n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1] + weights[k];
    }

    let mut found = Vec::new();
    // (next position, bits, weight so far)
    let mut stack = vec![(0usize, 0u64, 0u128)];
    while let Some((k, bits, sum)) = stack.pop() {
        if k == n || sum + suffix[k] < quota {
            continue;
        }
        // Zero-weight players can never complete a minimal coalition.
        if weights[k] == 0 {
            continue;
        }
        stack.push((k + 1, bits, sum));
        let with = bits | 1 << order[k];
        let total = sum + weights[k];
        if total >= quota {
            found.push(Coalition::raw(n, with));
        } else {
            stack.push((k + 1, with, total));
        }
    }
    found.sort_unstable();
    SimpleGame {
        n,
        mwc: SetFamily::from_sorted_antichain(n, found),
    }
}

/// Minimal blocking coalitions, computed as the minimal transversals
/// (hitting sets) of the minimal winning coalitions.
///
/// Berge's incremental scheme: keep the minimal transversals of the edges seen
/// so far and extend those missing the next edge by one of its members.
pub fn minimal_blocking(game: &SimpleGame) -> SetFamily {
    let n = game.n;
    let mut edges: Vec<u64> = game.mwc.iter().map(|c| c.bits()).collect();
    edges.sort_by_key(|e| (e.count_ones(), *e));

    let mut transversals: Vec<u64> = vec![0];
    for &edge in &edges {
        let (hit, miss): (Vec<u64>, Vec<u64>) =
            transversals.iter().partition(|&&t| t & edge != 0);
        if miss.is_empty() {
            continue;
        }
        let mut fresh: Vec<u64> = Vec::new();
        for t in miss {
            let mut rest = edge;
            while rest != 0 {
                let e = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let cand = t | e;
                if !hit.iter().any(|&h| h & !cand == 0) {
                    fresh.push(cand);
                }
            }
        }
        fresh.sort_by_key(|c| (c.count_ones(), *c));
        fresh.dedup();
        let mut next = hit;
        let start = next.len();
        for cand in fresh {
            if !next[start..].iter().any(|&g| g & !cand == 0) {
                next.push(cand);
            }
        }
        transversals = next;
    }

    let mut out: Vec<Coalition> = transversals
        .into_iter()
        .map(|b| Coalition::raw(n, b))
        .collect();
    out.sort_unstable();
    SetFamily::from_sorted_antichain(n, out)
}

/// The dual game `v*(S) = v(N) - v(N \ S)`. Its minimal winning coalitions
/// are the minimal blocking coalitions of `game`.
pub fn dual(game: &SimpleGame) -> SimpleGame {
    SimpleGame {
        n: game.n,
        mwc: minimal_blocking(game),
    }
}

pub fn is_winning(game: &SimpleGame, s: &Coalition) -> bool {
    game.is_winning(s)
}
