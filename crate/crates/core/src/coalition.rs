//! Bit-encoded coalitions over at most 64 players.
//!
//! Players are 0-based internally; `Display` renders the 1-based labels used
//! in documents and reports.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_PLAYERS: usize = 64;

pub(crate) fn check_player_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(Error::PlayerCount(n));
    }
    Ok(())
}

/// Mask with the low `n` bits set.
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the players `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coalition {
    bits: u64,
    n: u8,
}

impl Coalition {
    pub fn empty(n: usize) -> Result<Self> {
        check_player_count(n)?;
        Ok(Coalition { bits: 0, n: n as u8 })
    }

    /// The grand coalition `N`.
    pub fn grand(n: usize) -> Result<Self> {
        check_player_count(n)?;
        Ok(Coalition {
            bits: full_mask(n),
            n: n as u8,
        })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_player_count(n)?;
        if bits & !full_mask(n) != 0 {
            let player = 63 - (bits & !full_mask(n)).leading_zeros() as usize;
            return Err(Error::PlayerOutOfRange { player, n });
        }
        Ok(Coalition { bits, n: n as u8 })
    }

    /// Builds a coalition from 0-based player indices. Duplicates are ignored.
    pub fn from_players<I: IntoIterator<Item = usize>>(n: usize, players: I) -> Result<Self> {
        check_player_count(n)?;
        let mut bits = 0u64;
        for p in players {
            if p >= n {
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
            bits |= 1 << p;
        }
        Ok(Coalition { bits, n: n as u8 })
    }

    /// Builds a coalition from 1-based labels, as written in documents.
    pub fn from_labels<I: IntoIterator<Item = usize>>(n: usize, labels: I) -> Result<Self> {
        check_player_count(n)?;
        let mut bits = 0u64;
        for l in labels {
            if l == 0 || l > n {
                return Err(Error::PlayerOutOfRange { player: l, n });
            }
            bits |= 1 << (l - 1);
        }
        Ok(Coalition { bits, n: n as u8 })
    }

    pub(crate) fn raw(n: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_PLAYERS).contains(&n) && bits & !full_mask(n) == 0);
        Coalition { bits, n: n as u8 }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, player: usize) -> bool {
        player < self.n() && self.bits >> player & 1 == 1
    }

    #[inline]
    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_strict_subset(&self, other: &Coalition) -> bool {
        self.bits != other.bits && self.is_subset(other)
    }

    #[inline]
    pub fn intersects(&self, other: &Coalition) -> bool {
        self.bits & other.bits != 0
    }

    pub fn with(&self, player: usize) -> Coalition {
        debug_assert!(player < self.n());
        Coalition {
            bits: self.bits | 1 << player,
            n: self.n,
        }
    }

    pub fn without(&self, player: usize) -> Coalition {
        Coalition {
            bits: self.bits & !(1 << player),
            n: self.n,
        }
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        Coalition {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    /// `N \ self`.
    pub fn complement(&self) -> Coalition {
        Coalition {
            bits: !self.bits & full_mask(self.n()),
            n: self.n,
        }
    }

    /// Members in ascending order.
    pub fn players(&self) -> Players {
        Players(self.bits)
    }

    pub fn labels(&self) -> Vec<usize> {
        self.players().map(|p| p + 1).collect()
    }
}

pub struct Players(u64);

impl Iterator for Players {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Players {}

/// Canonical order: by size, then by numeric bit value.
impl Ord for Coalition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.bits.cmp(&other.bits))
            .then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_are_one_based() {
        let c = Coalition::from_labels(5, [1, 4]).unwrap();
        assert_eq!(c.bits(), 0b01001);
        assert_eq!(c.labels(), vec![1, 4]);
        assert_eq!(c.to_string(), "{1,4}");
        assert!(c.contains(0) && c.contains(3) && !c.contains(1));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Coalition::from_labels(3, [4]).is_err());
        assert!(Coalition::from_labels(3, [0]).is_err());
        assert!(Coalition::from_players(3, [3]).is_err());
        assert!(Coalition::from_bits(3, 0b1000).is_err());
        assert_eq!(Coalition::empty(0), Err(Error::PlayerCount(0)));
        assert_eq!(Coalition::empty(65), Err(Error::PlayerCount(65)));
    }

    #[test]
    fn sixty_four_players() {
        let g = Coalition::grand(64).unwrap();
        assert_eq!(g.len(), 64);
        assert!(g.complement().is_empty());
        assert!(g.contains(63));
    }

    #[test]
    fn canonical_order_is_size_then_bits() {
        let a = Coalition::from_labels(5, [3]).unwrap();
        let b = Coalition::from_labels(5, [1, 2]).unwrap();
        let c = Coalition::from_labels(5, [1, 3]).unwrap();
        let mut v = vec![c, b, a];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }

    #[test]
    fn complement_and_subsets() {
        let s = Coalition::from_labels(4, [1, 2]).unwrap();
        assert_eq!(s.complement(), Coalition::from_labels(4, [3, 4]).unwrap());
        assert!(s.is_strict_subset(&Coalition::grand(4).unwrap()));
        assert!(!s.is_strict_subset(&s));
        assert!(s.is_subset(&s));
    }
}
