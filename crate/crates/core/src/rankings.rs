//! Size profiles of minimal coalitions, exact power indices, and the rankings
//! built from them.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::game::SimpleGame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThetaKind {
    /// Counts over minimal winning coalitions.
    Winning,
    /// Counts over minimal blocking coalitions.
    Blocking,
}

/// `counts[k - 1]` is the number of minimal coalitions of size `k` that contain
/// `player`. Always `n` entries long.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaVector {
    pub player: usize,
    pub kind: ThetaKind,
    pub counts: Vec<u64>,
}

impl ThetaVector {
    /// Counts listed from the largest size down.
    pub fn reversed(&self) -> Vec<u64> {
        self.counts.iter().rev().copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

impl fmt::Display for ThetaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.counts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Theta vectors of every player over `family`, in one pass.
pub fn theta_profile(family: &SetFamily, kind: ThetaKind) -> Vec<ThetaVector> {
    let n = family.n();
    let mut out: Vec<ThetaVector> = (0..n)
        .map(|player| ThetaVector {
            player,
            kind,
            counts: vec![0; n],
        })
        .collect();
    for c in family {
        let size = c.len();
        if size == 0 {
            continue;
        }
        for p in c.players() {
            out[p].counts[size - 1] += 1;
        }
    }
    out
}

fn theta_of(family: &SetFamily, kind: ThetaKind, player: usize) -> ThetaVector {
    let mut counts = vec![0; family.n()];
    for c in family.containing(player) {
        counts[c.len() - 1] += 1;
    }
    ThetaVector {
        player,
        kind,
        counts,
    }
}

pub fn theta(game: &SimpleGame, player: usize) -> Result<ThetaVector> {
    game.check_player(player)?;
    Ok(theta_of(game.mwc(), ThetaKind::Winning, player))
}

pub fn theta_star(game: &SimpleGame, player: usize) -> Result<ThetaVector> {
    game.check_player(player)?;
    Ok(theta_of(&game.minimal_blocking(), ThetaKind::Blocking, player))
}

/// Lexicographic comparison: the first differing coordinate decides.
pub fn lex_compare(x: &[u64], y: &[u64]) -> Result<Ordering> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.cmp(y))
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_integer(v: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl Add for ExactRational {
    type Output = ExactRational;

    fn add(self, rhs: Self) -> Self {
        ExactRational(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a ExactRational> for ExactRational {
    type Output = ExactRational;

    fn add(self, rhs: &'a ExactRational) -> Self {
        ExactRational(self.0 + &rhs.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |a, b| a + b)
    }
}

/// Always `p/q`, including integers (`0/1`, `1/1`).
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Public Good Index: each player's MWC count over the sum of all counts.
pub fn pgi(game: &SimpleGame) -> Vec<ExactRational> {
    let counts: Vec<i64> = (0..game.n())
        .map(|p| game.mwc().containing(p).count() as i64)
        .collect();
    let total: i64 = counts.iter().sum();
    counts
        .into_iter()
        .map(|c| ExactRational::new(c, total))
        .collect()
}

/// Deegan-Packel Index: each MWC is shared equally by its members, and MWCs
/// are equally likely.
pub fn dpi(game: &SimpleGame) -> Vec<ExactRational> {
    let m = BigInt::from(game.mwc().len());
    let mut out = vec![BigRational::zero(); game.n()];
    for w in game.mwc() {
        let share = BigRational::new(BigInt::one(), &m * BigInt::from(w.len()));
        for p in w.players() {
            out[p] += &share;
        }
    }
    out.into_iter().map(ExactRational).collect()
}

/// A total preorder on players, as equivalence classes listed best first.
/// Players inside a class are ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    classes: Vec<Vec<usize>>,
    position: Vec<usize>,
}

impl Ranking {
    pub fn from_classes(n: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut position = vec![usize::MAX; n];
        let mut classes = classes;
        for (k, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidRanking(format!("class {k} is empty")));
            }
            class.sort_unstable();
            for &p in class.iter() {
                if p >= n {
                    return Err(Error::PlayerOutOfRange { player: p, n });
                }
                if position[p] != usize::MAX {
                    return Err(Error::InvalidRanking(format!("player {} listed twice", p + 1)));
                }
                position[p] = k;
            }
        }
        if let Some(p) = position.iter().position(|&k| k == usize::MAX) {
            return Err(Error::InvalidRanking(format!("player {} missing", p + 1)));
        }
        Ok(Ranking { classes, position })
    }

    /// Ranks players by descending key; equal keys share a class.
    pub fn by_key_desc<K: Ord>(keys: &[K]) -> Self {
        Ranking::by_cmp_desc(keys.len(), |a, b| keys[a].cmp(&keys[b]))
    }

    /// Ranks players so that `cmp(a, b) == Greater` puts `a` above `b`.
    /// `cmp` must be a total preorder.
    pub fn by_cmp_desc<F: Fn(usize, usize) -> Ordering>(n: usize, cmp: F) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| cmp(b, a).then(a.cmp(&b)));
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for p in order {
            match classes.last_mut() {
                Some(last) if cmp(last[0], p) == Ordering::Equal => last.push(p),
                _ => classes.push(vec![p]),
            }
        }
        let mut position = vec![0; n];
        for (k, class) in classes.iter_mut().enumerate() {
            class.sort_unstable();
            for &p in class.iter() {
                position[p] = k;
            }
        }
        Ranking { classes, position }
    }

    pub fn n(&self) -> usize {
        self.position.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Index of the class holding `player`; 0 is the top class.
    pub fn class_of(&self, player: usize) -> usize {
        self.position[player]
    }

    /// `i R j`: `i` is at least as high as `j`.
    pub fn weakly(&self, i: usize, j: usize) -> bool {
        self.position[i] <= self.position[j]
    }

    /// `i P j`
    pub fn strictly(&self, i: usize, j: usize) -> bool {
        self.position[i] < self.position[j]
    }

    /// `i I j`
    pub fn indifferent(&self, i: usize, j: usize) -> bool {
        self.position[i] == self.position[j]
    }

    /// Renders as `1 > 3 = 4 > 2`, with 1-based indices or the given labels.
    pub fn render(&self, labels: Option<&[String]>) -> String {
        let name = |p: usize| match labels {
            Some(l) => l[p].clone(),
            None => (p + 1).to_string(),
        };
        self.classes
            .iter()
            .map(|c| c.iter().map(|&p| name(p)).collect::<Vec<_>>().join(" = "))
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

impl fmt::Debug for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ranking({self})")
    }
}

fn lex_ranking(profile: &[ThetaVector]) -> Ranking {
    Ranking::by_cmp_desc(profile.len(), |a, b| profile[a].counts.cmp(&profile[b].counts))
}

/// Lexicographic Public Good Ranking: theta vectors compared lexicographically.
pub fn lpgr(game: &SimpleGame) -> Ranking {
    lex_ranking(&theta_profile(game.mwc(), ThetaKind::Winning))
}

/// Criticality-based ranking: theta-star vectors compared lexicographically.
pub fn criticality_ranking(game: &SimpleGame) -> Ranking {
    lex_ranking(&theta_profile(&game.minimal_blocking(), ThetaKind::Blocking))
}

/// Descending exact scores; ties share a class.
pub fn ranking_from_scores(scores: &[ExactRational]) -> Ranking {
    Ranking::by_key_desc(scores)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::WeightedGame;

    fn example1() -> SimpleGame {
        SimpleGame::from_labels(5, &[&[1, 2], &[1, 3], &[3, 4], &[2, 4, 5], &[1, 4, 5]]).unwrap()
    }

    fn nomon() -> SimpleGame {
        WeightedGame::new(vec![4, 2, 1, 1, 1], 6).unwrap().to_simple()
    }

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    #[test]
    fn theta_example1() {
        let g = example1();
        let expect: [[u64; 5]; 5] = [
            [0, 2, 1, 0, 0],
            [0, 1, 1, 0, 0],
            [0, 2, 0, 0, 0],
            [0, 1, 2, 0, 0],
            [0, 0, 2, 0, 0],
        ];
        for (p, e) in expect.iter().enumerate() {
            assert_eq!(theta(&g, p).unwrap().counts, e.to_vec());
        }
        assert_eq!(theta(&g, 0).unwrap().to_string(), "(0,2,1,0,0)");
    }

    #[test]
    fn theta_null_player() {
        let g = SimpleGame::from_labels(3, &[&[1, 2]]).unwrap();
        assert_eq!(theta(&g, 2).unwrap().counts, vec![0, 0, 0]);
    }

    #[test]
    fn theta_star_weighted() {
        let g = nomon();
        assert_eq!(theta_star(&g, 0).unwrap().counts, vec![1, 0, 0, 0, 0]);
        assert_eq!(theta_star(&g, 1).unwrap().counts, vec![0, 0, 3, 0, 0]);
        assert_eq!(theta_star(&g, 2).unwrap().counts, vec![0, 0, 2, 0, 0]);
    }

    #[test]
    fn theta_star_example1() {
        // Over {1,4},{1,2,3},{1,3,5},{2,3,4},{2,3,5}.
        let g = example1();
        let got: Vec<Vec<u64>> = (0..5).map(|p| theta_star(&g, p).unwrap().counts).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1, 2, 0, 0],
                vec![0, 0, 3, 0, 0],
                vec![0, 0, 4, 0, 0],
                vec![0, 1, 1, 0, 0],
                vec![0, 0, 2, 0, 0],
            ]
        );
    }

    #[test]
    fn pgi_examples() {
        assert_eq!(
            pgi(&example1()),
            vec![r(3, 12), r(2, 12), r(2, 12), r(3, 12), r(2, 12)]
        );
        let h = pgi(&nomon());
        assert_eq!((h[1].clone(), h[2].clone()), (r(1, 11), r(2, 11)));
        assert_eq!(pgi(&SimpleGame::unanimity(4).unwrap()), vec![r(1, 4); 4]);
    }

    #[test]
    fn dpi_examples() {
        // (1/5)(1/2 + 1/2 + 1/3) = 8/30 for player 1, and so on.
        assert_eq!(
            dpi(&example1()),
            vec![r(8, 30), r(5, 30), r(6, 30), r(7, 30), r(4, 30)]
        );
        let d = dpi(&nomon());
        assert_eq!((d[1].clone(), d[2].clone()), (r(1, 8), r(1, 6)));
        let single = SimpleGame::from_labels(4, &[&[2, 3, 4]]).unwrap();
        assert_eq!(dpi(&single), vec![r(0, 1), r(1, 3), r(1, 3), r(1, 3)]);
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(
            lex_compare(&[0, 2, 1, 0, 0], &[0, 2, 0, 0, 0]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(lex_compare(&[1, 2], &[1, 2]).unwrap(), Ordering::Equal);
        assert_eq!(
            lex_compare(&[0, 1, 0, 1, 0], &[0, 0, 3, 1, 0]).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            lex_compare(&[1], &[1, 2]),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
    }

    #[test]
    fn lpgr_examples() {
        assert_eq!(lpgr(&example1()).to_string(), "1 > 3 > 4 > 2 > 5");
        assert_eq!(lpgr(&nomon()).to_string(), "1 > 2 > 3 = 4 = 5");
        assert_eq!(lpgr(&SimpleGame::unanimity(3).unwrap()).to_string(), "1 = 2 = 3");
    }

    #[test]
    fn criticality_examples() {
        assert_eq!(criticality_ranking(&example1()).to_string(), "1 > 4 > 3 > 2 > 5");
        assert_eq!(criticality_ranking(&nomon()).to_string(), "1 > 2 > 3 = 4 = 5");
    }

    #[test]
    fn score_rankings() {
        assert_eq!(ranking_from_scores(&pgi(&example1())).to_string(), "1 = 4 > 2 = 3 = 5");
        assert_eq!(ranking_from_scores(&dpi(&example1())).to_string(), "1 > 4 > 3 > 2 > 5");
        assert_eq!(ranking_from_scores(&vec![r(1, 3); 3]).classes().len(), 1);
    }

    #[test]
    fn exact_rational_rendering() {
        assert_eq!(r(3, 12).to_string(), "1/4");
        assert_eq!(ExactRational::one().to_string(), "1/1");
        assert_eq!(ExactRational::zero().to_string(), "0/1");
        assert_eq!(r(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn ranking_relations() {
        let rk = Ranking::from_classes(4, vec![vec![2], vec![3, 0], vec![1]]).unwrap();
        assert_eq!(rk.classes()[1], vec![0, 3]);
        assert!(rk.strictly(2, 0) && rk.indifferent(0, 3) && rk.weakly(3, 0));
        assert!(!rk.weakly(1, 0));
        assert!(Ranking::from_classes(3, vec![vec![0, 1]]).is_err());
        assert!(Ranking::from_classes(2, vec![vec![0, 1], vec![1]]).is_err());
    }
}
