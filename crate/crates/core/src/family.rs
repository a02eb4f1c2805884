use std::fmt;

use crate::coalition::{check_player_count, Coalition};
use crate::error::{Error, Result};

/// A deduplicated family of coalitions over the same `n`, stored in canonical
/// (size, bits) order. Equality compares the sets only, not the flag.
#[derive(Clone)]
pub struct SetFamily {
    n: usize,
    coalitions: Vec<Coalition>,
    antichain: bool,
}

impl PartialEq for SetFamily {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.coalitions == other.coalitions
    }
}

impl Eq for SetFamily {}

impl std::hash::Hash for SetFamily {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.coalitions.hash(state);
    }
}

impl SetFamily {
    pub fn empty(n: usize) -> Result<Self> {
        check_player_count(n)?;
        Ok(SetFamily {
            n,
            coalitions: Vec::new(),
            antichain: true,
        })
    }

    /// Builds a family without the antichain flag. Duplicates are dropped.
    pub fn new<I: IntoIterator<Item = Coalition>>(n: usize, coalitions: I) -> Result<Self> {
        check_player_count(n)?;
        let mut coalitions: Vec<Coalition> = coalitions.into_iter().collect();
        for c in &coalitions {
            if c.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: c.n(),
                });
            }
        }
        coalitions.sort_unstable();
        coalitions.dedup();
        Ok(SetFamily {
            n,
            coalitions,
            antichain: false,
        })
    }

    /// Builds a family that must already be an antichain.
    pub fn antichain<I: IntoIterator<Item = Coalition>>(n: usize, coalitions: I) -> Result<Self> {
        let mut family = SetFamily::new(n, coalitions)?;
        if let Some((sub, sup)) = family.strict_inclusion() {
            return Err(Error::NotAntichain {
                subset: sub.to_string(),
                superset: sup.to_string(),
            });
        }
        family.antichain = true;
        Ok(family)
    }

    pub(crate) fn from_sorted_antichain(n: usize, coalitions: Vec<Coalition>) -> Self {
        debug_assert!(coalitions.windows(2).all(|w| w[0] < w[1]));
        SetFamily {
            n,
            coalitions,
            antichain: true,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn is_antichain(&self) -> bool {
        self.antichain
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coalition> {
        self.coalitions.iter()
    }

    pub fn contains(&self, c: &Coalition) -> bool {
        self.coalitions.binary_search(c).is_ok()
    }

    /// Some pair `(G, F)` with `G ⊂ F`, if the family has one.
    pub fn strict_inclusion(&self) -> Option<(Coalition, Coalition)> {
        // Canonical order puts smaller sets first, so only earlier entries
        // can be strict subsets of later ones.
        for (k, f) in self.coalitions.iter().enumerate() {
            if let Some(g) = self.coalitions[..k].iter().find(|g| g.is_strict_subset(f)) {
                return Some((*g, *f));
            }
        }
        None
    }

    /// The `Min` operator: keeps the inclusion-minimal members.
    pub fn min_sets(&self) -> SetFamily {
        if self.antichain {
            return self.clone();
        }
        let mut kept: Vec<Coalition> = Vec::with_capacity(self.coalitions.len());
        for f in &self.coalitions {
            if !kept.iter().any(|g| g.is_subset(f)) {
                kept.push(*f);
            }
        }
        SetFamily::from_sorted_antichain(self.n, kept)
    }

    /// Members containing `player`.
    pub fn containing(&self, player: usize) -> impl Iterator<Item = &Coalition> {
        self.coalitions.iter().filter(move |c| c.contains(player))
    }
}

/// `Min` over arbitrary coalitions; fails on mixed player counts.
pub fn min_sets<I: IntoIterator<Item = Coalition>>(n: usize, coalitions: I) -> Result<SetFamily> {
    Ok(SetFamily::new(n, coalitions)?.min_sets())
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.coalitions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetFamily(n={}, {})", self.n, self)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Coalition;
    type IntoIter = std::slice::Iter<'a, Coalition>;

    fn into_iter(self) -> Self::IntoIter {
        self.coalitions.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, sets: &[&[usize]]) -> SetFamily {
        SetFamily::new(
            n,
            sets.iter()
                .map(|s| Coalition::from_labels(n, s.iter().copied()).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn equality_ignores_antichain_flag() {
        let plain = fam(3, &[&[1], &[2, 3]]);
        let checked = plain.min_sets();
        assert!(!plain.is_antichain() && checked.is_antichain());
        assert_eq!(plain, checked);
    }

    #[test]
    fn min_sets_removes_supersets() {
        let f = fam(3, &[&[1, 2], &[1, 2, 3], &[3]]);
        let m = f.min_sets();
        assert!(m.is_antichain());
        assert_eq!(m, SetFamily::antichain(3, fam(3, &[&[1, 2], &[3]]).iter().copied()).unwrap());
        assert_eq!(m.to_string(), "{{3},{1,2}}");
    }

    #[test]
    fn min_sets_of_empty_family() {
        let m = SetFamily::empty(4).unwrap().min_sets();
        assert!(m.is_empty() && m.is_antichain());
    }

    #[test]
    fn duplicates_are_dropped() {
        let f = fam(3, &[&[1], &[1], &[2, 3]]);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let a = Coalition::from_labels(3, [1]).unwrap();
        let b = Coalition::from_labels(4, [1]).unwrap();
        assert_eq!(
            SetFamily::new(3, [a, b]),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn antichain_constructor_validates() {
        let err = SetFamily::antichain(
            3,
            fam(3, &[&[1, 2], &[1, 2, 3]]).iter().copied(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotAntichain { .. }));
    }
}
