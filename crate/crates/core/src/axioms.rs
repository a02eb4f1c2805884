//! Ranking solutions and mechanical checks of the three axioms that single out
//! the lexicographic public good ranking: desirable monotonicity (DM),
//! anonymity of minimal winning coalitions (AMWC) and independence of larger
//! minimal winning coalitions (ILMWC).
//!
//! Besides the checkers this module carries the game transformations the
//! axioms quantify over, random samplers for those transformations, and three
//! solutions that each break exactly one axiom on a known instance.

use std::cmp::{Ordering, Reverse};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coalition::Coalition;
use crate::desirability::{desirability_matrix, PairRelation};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::game::SimpleGame;
use crate::rankings::{
    criticality_ranking, dpi, lpgr, pgi, ranking_from_scores, theta_profile, Ranking, ThetaKind,
};

/// A map from simple games to rankings of their players.
pub trait RankingSolution {
    fn name(&self) -> &str;
    fn rank(&self, game: &SimpleGame) -> Ranking;
}

/// The solutions shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Solution {
    Lpgr,
    Criticality,
    Pgi,
    Dpi,
    /// Singleton winningness only; breaks DM.
    RDm,
    /// Theta order with a coalition-identity tie break; breaks AMWC.
    RAmwc,
    /// Reversed theta order on incomparable pairs; breaks ILMWC.
    RIlmwc,
}

impl Solution {
    pub const ALL: [Solution; 7] = [
        Solution::Lpgr,
        Solution::Criticality,
        Solution::Pgi,
        Solution::Dpi,
        Solution::RDm,
        Solution::RAmwc,
        Solution::RIlmwc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Solution::Lpgr => "lpgr",
            Solution::Criticality => "criticality",
            Solution::Pgi => "pgi",
            Solution::Dpi => "dpi",
            Solution::RDm => "r-dm",
            Solution::RAmwc => "r-amwc",
            Solution::RIlmwc => "r-ilmwc",
        }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Solution {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Solution::ALL
            .into_iter()
            .find(|sol| sol.as_str() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = Solution::ALL.iter().map(|s| s.as_str()).collect();
                format!("unknown solution `{s}` (expected one of {})", names.join(", "))
            })
    }
}

impl RankingSolution for Solution {
    fn name(&self) -> &str {
        self.as_str()
    }

    fn rank(&self, game: &SimpleGame) -> Ranking {
        match self {
            Solution::Lpgr => lpgr(game),
            Solution::Criticality => criticality_ranking(game),
            Solution::Pgi => ranking_from_scores(&pgi(game)),
            Solution::Dpi => ranking_from_scores(&dpi(game)),
            Solution::RDm => r_dm_counterexample(game),
            Solution::RAmwc => r_amwc_counterexample(game),
            Solution::RIlmwc => r_ilmwc_counterexample(game),
        }
    }
}

/// Wraps a closure as a named solution.
pub struct FnSolution<F> {
    name: String,
    f: F,
}

impl<F: Fn(&SimpleGame) -> Ranking> FnSolution<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnSolution {
            name: name.into(),
            f,
        }
    }
}

impl<F: Fn(&SimpleGame) -> Ranking> RankingSolution for FnSolution<F> {
    fn name(&self) -> &str {
        &self.name
    }

    fn rank(&self, game: &SimpleGame) -> Ranking {
        (self.f)(game)
    }
}

/// Where `i` sits relative to `j` in a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairOrder {
    Above,
    Tied,
    Below,
}

impl PairOrder {
    pub fn of(ranking: &Ranking, i: usize, j: usize) -> Self {
        match ranking.class_of(i).cmp(&ranking.class_of(j)) {
            Ordering::Less => PairOrder::Above,
            Ordering::Equal => PairOrder::Tied,
            Ordering::Greater => PairOrder::Below,
        }
    }
}

// ---------------------------------------------------------------------------
// Desirable monotonicity

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DmFailure {
    /// `i ∼ j` but the solution separates them.
    EquivalentSplit,
    /// `i ≻ j` but the solution does not put `i` strictly above `j`.
    StrictNotPreserved,
}

/// For `StrictNotPreserved`, `i` is the more desirable player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DmViolation {
    pub i: usize,
    pub j: usize,
    pub failure: DmFailure,
}

impl fmt::Display for DmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.failure {
            DmFailure::EquivalentSplit => {
                write!(f, "{} ~ {} but ranked apart", self.i + 1, self.j + 1)
            }
            DmFailure::StrictNotPreserved => write!(
                f,
                "{} > {} in desirability but not strictly ranked",
                self.i + 1,
                self.j + 1
            ),
        }
    }
}

pub fn check_dm<S: RankingSolution + ?Sized>(solution: &S, game: &SimpleGame) -> Vec<DmViolation> {
    let ranking = solution.rank(game);
    dm_violations(&ranking, game)
}

pub(crate) fn dm_violations(ranking: &Ranking, game: &SimpleGame) -> Vec<DmViolation> {
    let matrix = desirability_matrix(game);
    let mut out = Vec::new();
    for i in 0..game.n() {
        for j in i + 1..game.n() {
            let v = match matrix.get(i, j) {
                PairRelation::Equivalent if !ranking.indifferent(i, j) => DmViolation {
                    i,
                    j,
                    failure: DmFailure::EquivalentSplit,
                },
                PairRelation::StrictlyMore if !ranking.strictly(i, j) => DmViolation {
                    i,
                    j,
                    failure: DmFailure::StrictNotPreserved,
                },
                PairRelation::StrictlyLess if !ranking.strictly(j, i) => DmViolation {
                    i: j,
                    j: i,
                    failure: DmFailure::StrictNotPreserved,
                },
                _ => continue,
            };
            out.push(v);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Anonymity of minimal winning coalitions

/// A cardinality-preserving injective map on coalitions of `N \ {i, j}`,
/// identity on coalitions it does not list. Any such map extends to a
/// bijection of `2^(N \ {i,j})` that preserves sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionBijection {
    n: usize,
    i: usize,
    j: usize,
    pairs: Vec<(Coalition, Coalition)>,
}

impl CoalitionBijection {
    pub fn new(n: usize, i: usize, j: usize, pairs: Vec<(Coalition, Coalition)>) -> Result<Self> {
        for p in [i, j] {
            if p >= n {
                return Err(Error::PlayerOutOfRange { player: p, n });
            }
        }
        if i == j {
            return Err(Error::SamePlayer(i));
        }
        let ij = Coalition::from_players(n, [i, j])?;
        let mut sources = HashSet::new();
        let mut images = HashSet::new();
        for (s, t) in &pairs {
            if s.n() != n || t.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: if s.n() != n { s.n() } else { t.n() },
                });
            }
            if s.intersects(&ij) || t.intersects(&ij) {
                return Err(Error::InvalidBijection(format!(
                    "{s} -> {t} touches players {} or {}",
                    i + 1,
                    j + 1
                )));
            }
            if s.len() != t.len() {
                return Err(Error::InvalidBijection(format!(
                    "{s} -> {t} changes the size"
                )));
            }
            if !sources.insert(*s) {
                return Err(Error::InvalidBijection(format!("{s} mapped twice")));
            }
            if !images.insert(*t) {
                return Err(Error::InvalidBijection(format!("{t} hit twice")));
            }
        }
        Ok(CoalitionBijection { n, i, j, pairs })
    }

    pub fn identity(n: usize, i: usize, j: usize) -> Result<Self> {
        CoalitionBijection::new(n, i, j, Vec::new())
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn pairs(&self) -> &[(Coalition, Coalition)] {
        &self.pairs
    }

    pub fn image(&self, s: &Coalition) -> Coalition {
        self.pairs
            .iter()
            .find(|(src, _)| src == s)
            .map(|(_, t)| *t)
            .unwrap_or(*s)
    }
}

impl fmt::Display for CoalitionBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i={}, j={}", self.i + 1, self.j + 1)?;
        for (s, t) in &self.pairs {
            write!(f, ", {s}->{t}")?;
        }
        f.write_str(")")
    }
}

/// Builds `v_π`: every minimal winning `S ∪ {j}` with `i ∉ S` becomes
/// `π(S) ∪ {j}`; all other minimal winning coalitions are kept.
pub fn apply_bijection(game: &SimpleGame, pi: &CoalitionBijection) -> Result<SimpleGame> {
    if pi.n != game.n() {
        return Err(Error::DimensionMismatch {
            left: game.n(),
            right: pi.n,
        });
    }
    let (i, j) = (pi.i, pi.j);
    let mut images = HashSet::new();
    let mut out = Vec::with_capacity(game.mwc().len());
    for m in game.mwc() {
        if m.contains(j) && !m.contains(i) {
            let s = m.without(j);
            let t = pi.image(&s);
            if !images.insert(t) {
                return Err(Error::InvalidBijection(format!(
                    "two coalitions with player {} map onto {t}",
                    j + 1
                )));
            }
            out.push(t.with(j));
        } else {
            out.push(*m);
        }
    }
    let family = SetFamily::new(game.n(), out)?;
    if let Some((sub, sup)) = family.strict_inclusion() {
        return Err(Error::InvalidBijection(format!(
            "result is not an antichain: {sub} is inside {sup}"
        )));
    }
    SimpleGame::from_family(family)
}

/// Does the solution order `(i, j)` the same way in `game` and in `v_π`?
pub fn check_amwc<S: RankingSolution + ?Sized>(
    solution: &S,
    game: &SimpleGame,
    pi: &CoalitionBijection,
) -> Result<bool> {
    let transformed = apply_bijection(game, pi)?;
    let before = PairOrder::of(&solution.rank(game), pi.i, pi.j);
    let after = PairOrder::of(&solution.rank(&transformed), pi.i, pi.j);
    Ok(before == after)
}

// ---------------------------------------------------------------------------
// Independence of larger minimal winning coalitions

/// Largest minimal winning coalition meeting `{i, j}`; 0 when none does.
pub fn larger_threshold(game: &SimpleGame, i: usize, j: usize) -> usize {
    game.mwc()
        .iter()
        .filter(|m| m.contains(i) || m.contains(j))
        .map(|m| m.len())
        .max()
        .unwrap_or(0)
}

/// Coalitions, all larger than `h`, to be added as new minimal winning
/// coalitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargerFamily {
    h: usize,
    coalitions: Vec<Coalition>,
}

impl LargerFamily {
    /// Validates `coalitions` against `game` and the pair `(i, j)`.
    pub fn new(game: &SimpleGame, i: usize, j: usize, coalitions: Vec<Coalition>) -> Result<Self> {
        game.check_player(i)?;
        game.check_player(j)?;
        if i == j {
            return Err(Error::SamePlayer(i));
        }
        let h = larger_threshold(game, i, j);
        let family = LargerFamily {
            h,
            coalitions: SetFamily::new(game.n(), coalitions)?.coalitions().to_vec(),
        };
        family.validate(game)?;
        Ok(family)
    }

    pub fn empty(game: &SimpleGame, i: usize, j: usize) -> Result<Self> {
        LargerFamily::new(game, i, j, Vec::new())
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    fn validate(&self, game: &SimpleGame) -> Result<()> {
        for s in &self.coalitions {
            if s.n() != game.n() {
                return Err(Error::DimensionMismatch {
                    left: game.n(),
                    right: s.n(),
                });
            }
            if s.len() <= self.h {
                return Err(Error::InvalidExtension(format!(
                    "{s} has size {} but must be larger than {}",
                    s.len(),
                    self.h
                )));
            }
            let inner = game
                .mwc()
                .iter()
                .chain(&self.coalitions)
                .find(|q| q.is_strict_subset(s));
            if let Some(q) = inner {
                return Err(Error::InvalidExtension(format!("{s} strictly contains {q}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LargerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h={} [", self.h)?;
        for (k, c) in self.coalitions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Builds `v'` whose minimal winning coalitions are those of `game` plus `fam`.
pub fn extend_with_larger(
    game: &SimpleGame,
    i: usize,
    j: usize,
    fam: &LargerFamily,
) -> Result<SimpleGame> {
    let h = larger_threshold(game, i, j);
    if fam.h != h {
        return Err(Error::InvalidExtension(format!(
            "family was built for h={} but the pair has h={h}",
            fam.h
        )));
    }
    fam.validate(game)?;
    let family = SetFamily::new(
        game.n(),
        game.mwc().iter().chain(&fam.coalitions).copied(),
    )?;
    if let Some((sub, sup)) = family.strict_inclusion() {
        return Err(Error::InvalidExtension(format!(
            "result is not an antichain: {sub} is inside {sup}"
        )));
    }
    SimpleGame::from_family(family)
}

/// `i P j` in `game` must survive the extension. Vacuously true otherwise.
pub fn check_ilmwc<S: RankingSolution + ?Sized>(
    solution: &S,
    game: &SimpleGame,
    i: usize,
    j: usize,
    fam: &LargerFamily,
) -> Result<bool> {
    let extended = extend_with_larger(game, i, j, fam)?;
    if !solution.rank(game).strictly(i, j) {
        return Ok(true);
    }
    Ok(solution.rank(&extended).strictly(i, j))
}

// ---------------------------------------------------------------------------
// Solutions that each break one axiom

/// Ranks players with a winning singleton above everyone else.
pub fn r_dm_counterexample(game: &SimpleGame) -> Ranking {
    let keys: Vec<bool> = (0..game.n())
        .map(|p| game.is_winning_bits(1 << p))
        .collect();
    Ranking::by_key_desc(&keys)
}

/// `max` over minimal winning `S ∋ i` of `min(S \ {i})`, as a 0-based player.
/// Singleton coalitions have no partner and are skipped.
pub fn max_min_partner(game: &SimpleGame, i: usize) -> Option<usize> {
    game.mwc()
        .containing(i)
        .filter_map(|s| s.without(i).players().next())
        .max()
}

/// Smallest player equivalent to each player under `∼`.
fn equivalence_representatives(game: &SimpleGame) -> Vec<usize> {
    let matrix = desirability_matrix(game);
    (0..game.n())
        .map(|p| {
            (0..=p)
                .find(|&q| matrix.get(q, p) == PairRelation::Equivalent)
                .unwrap_or(p)
        })
        .collect()
}

/// Theta order; equal-theta players that are not equally desirable are split
/// by [`max_min_partner`], taken as a maximum over each `∼`-class. Remaining
/// ties between distinct `∼`-classes go to the class with the smaller index.
pub fn r_amwc_counterexample(game: &SimpleGame) -> Ranking {
    let n = game.n();
    let theta = theta_profile(game.mwc(), ThetaKind::Winning);
    let rep = equivalence_representatives(game);
    let mut class_b: Vec<Option<usize>> = vec![None; n];
    for p in 0..n {
        class_b[rep[p]] = class_b[rep[p]].max(max_min_partner(game, p));
    }
    let keys: Vec<_> = (0..n)
        .map(|p| (theta[p].counts.clone(), class_b[rep[p]], Reverse(rep[p])))
        .collect();
    Ranking::by_key_desc(&keys)
}

/// Equal theta ties; strict desirability is always respected; otherwise
/// larger coalitions weigh first (reversed theta). Implemented as a linear
/// extension of `≻` over theta classes that greedily takes the available class
/// with the largest reversed theta.
pub fn r_ilmwc_counterexample(game: &SimpleGame) -> Ranking {
    let n = game.n();
    let theta = theta_profile(game.mwc(), ThetaKind::Winning);
    let matrix = desirability_matrix(game);

    let mut class_theta: Vec<Vec<u64>> = theta.iter().map(|t| t.counts.clone()).collect();
    class_theta.sort_unstable();
    class_theta.dedup();
    let class_of: Vec<usize> = theta
        .iter()
        .map(|t| class_theta.binary_search(&t.counts).unwrap())
        .collect();
    let k = class_theta.len();

    // before[a][b]: some member of class a is strictly more desirable than
    // some member of class b.
    let mut before = vec![vec![false; k]; k];
    for i in 0..n {
        for j in 0..n {
            if matrix.get(i, j) == PairRelation::StrictlyMore {
                before[class_of[i]][class_of[j]] = true;
            }
        }
    }

    let reversed: Vec<Vec<u64>> = class_theta
        .iter()
        .map(|t| t.iter().rev().copied().collect())
        .collect();
    let mut placed = vec![false; k];
    let mut class_rank = vec![0usize; k];
    for step in 0..k {
        let next = (0..k)
            .filter(|&c| !placed[c] && (0..k).all(|a| placed[a] || !before[a][c]))
            .max_by(|&a, &b| {
                reversed[a]
                    .cmp(&reversed[b])
                    .then_with(|| class_theta[a].cmp(&class_theta[b]))
            })
            .expect("strict desirability is acyclic");
        placed[next] = true;
        class_rank[next] = step;
    }
    let keys: Vec<Reverse<usize>> = (0..n).map(|p| Reverse(class_rank[class_of[p]])).collect();
    Ranking::by_key_desc(&keys)
}

// ---------------------------------------------------------------------------
// Sampling

fn random_subset<R: Rng + ?Sized>(rng: &mut R, pool: &[usize], size: usize, n: usize) -> Coalition {
    let picked: Vec<usize> = pool.choose_multiple(rng, size).copied().collect();
    Coalition::raw(n, picked.iter().fold(0u64, |b, &p| b | 1 << p))
}

fn random_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// Samples a one-pair bijection: a minimal winning `S ∪ {j}` (without `i`) is
/// moved onto a same-size `T ∪ {j}`. Samples whose result is not an antichain
/// are discarded.
pub fn sample_amwc_instance<R: Rng + ?Sized>(
    game: &SimpleGame,
    rng: &mut R,
) -> Option<CoalitionBijection> {
    let n = game.n();
    if n < 3 {
        return None;
    }
    for _ in 0..32 {
        let (i, j) = random_pair(rng, n);
        let sources: Vec<Coalition> = game
            .mwc()
            .iter()
            .filter(|m| m.contains(j) && !m.contains(i))
            .map(|m| m.without(j))
            .collect();
        let Some(&s) = sources.choose(rng) else {
            continue;
        };
        let pool: Vec<usize> = (0..n).filter(|&p| p != i && p != j).collect();
        let t = random_subset(rng, &pool, s.len(), n);
        if t == s || game.mwc().contains(&t.with(j)) {
            continue;
        }
        let Ok(pi) = CoalitionBijection::new(n, i, j, vec![(s, t)]) else {
            continue;
        };
        if apply_bijection(game, &pi).is_ok() {
            return Some(pi);
        }
    }
    None
}

/// Samples a pair and one or two coalitions larger than its threshold that
/// keep the family an antichain.
pub fn sample_ilmwc_instance<R: Rng + ?Sized>(
    game: &SimpleGame,
    rng: &mut R,
) -> Option<(usize, usize, LargerFamily)> {
    let n = game.n();
    if n < 2 {
        return None;
    }
    let everyone: Vec<usize> = (0..n).collect();
    for _ in 0..32 {
        let (i, j) = random_pair(rng, n);
        let h = larger_threshold(game, i, j);
        if h >= n {
            continue;
        }
        let wanted = rng.gen_range(1..=2);
        let mut chosen: Vec<Coalition> = Vec::new();
        for _ in 0..16 {
            if chosen.len() == wanted {
                break;
            }
            let size = rng.gen_range(h + 1..=n);
            let s = random_subset(rng, &everyone, size, n);
            let clash = game
                .mwc()
                .iter()
                .chain(&chosen)
                .any(|q| q.is_subset(&s) || s.is_subset(q));
            if !clash {
                chosen.push(s);
            }
        }
        if chosen.is_empty() {
            continue;
        }
        if let Ok(fam) = LargerFamily::new(game, i, j, chosen) {
            if extend_with_larger(game, i, j, &fam).is_ok() {
                return Some((i, j, fam));
            }
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct AmwcInstance {
    pub game: usize,
    pub bijection: CoalitionBijection,
}

#[derive(Debug, Clone)]
pub struct IlmwcInstance {
    pub game: usize,
    pub i: usize,
    pub j: usize,
    pub family: LargerFamily,
}

/// Sampled transformation instances over a list of games, deterministic in
/// the seed and independent of any solution.
#[derive(Debug, Clone, Default)]
pub struct AxiomInstances {
    pub amwc: Vec<AmwcInstance>,
    pub ilmwc: Vec<IlmwcInstance>,
}

impl AxiomInstances {
    /// Draws up to `trials` instances of each kind; games are picked at random.
    pub fn sample(games: &[SimpleGame], seed: u64, trials: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = AxiomInstances::default();
        if games.is_empty() {
            return out;
        }
        let budget = trials.saturating_mul(64);
        let mut attempts = 0;
        while out.amwc.len() < trials && attempts < budget {
            attempts += 1;
            let g = rng.gen_range(0..games.len());
            if let Some(bijection) = sample_amwc_instance(&games[g], &mut rng) {
                out.amwc.push(AmwcInstance { game: g, bijection });
            }
        }
        attempts = 0;
        while out.ilmwc.len() < trials && attempts < budget {
            attempts += 1;
            let g = rng.gen_range(0..games.len());
            if let Some((i, j, family)) = sample_ilmwc_instance(&games[g], &mut rng) {
                out.ilmwc.push(IlmwcInstance { game: g, i, j, family });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DmFinding {
    pub game: usize,
    pub violation: DmViolation,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairFinding {
    pub game: usize,
    pub i: usize,
    pub j: usize,
    pub before: PairOrder,
    pub after: PairOrder,
    pub instance: String,
}

/// Outcome of running one solution against DM on every game and against a
/// set of sampled AMWC and ILMWC instances.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub solution: String,
    pub games: usize,
    pub dm_violations: Vec<DmFinding>,
    pub amwc_checked: usize,
    pub amwc_failures: Vec<PairFinding>,
    pub ilmwc_checked: usize,
    pub ilmwc_failures: Vec<PairFinding>,
}

impl SuiteReport {
    pub fn dm_holds(&self) -> bool {
        self.dm_violations.is_empty()
    }

    pub fn amwc_holds(&self) -> bool {
        self.amwc_failures.is_empty()
    }

    pub fn ilmwc_holds(&self) -> bool {
        self.ilmwc_failures.is_empty()
    }

    pub fn all_hold(&self) -> bool {
        self.dm_holds() && self.amwc_holds() && self.ilmwc_holds()
    }
}

pub fn run_suite<S: RankingSolution + ?Sized>(
    solution: &S,
    games: &[SimpleGame],
    instances: &AxiomInstances,
) -> SuiteReport {
    let rankings: Vec<Ranking> = games.iter().map(|g| solution.rank(g)).collect();
    let mut report = SuiteReport {
        solution: solution.name().to_string(),
        games: games.len(),
        dm_violations: Vec::new(),
        amwc_checked: 0,
        amwc_failures: Vec::new(),
        ilmwc_checked: 0,
        ilmwc_failures: Vec::new(),
    };
    for (g, (game, ranking)) in games.iter().zip(&rankings).enumerate() {
        report.dm_violations.extend(
            dm_violations(ranking, game)
                .into_iter()
                .map(|violation| DmFinding { game: g, violation }),
        );
    }
    for inst in &instances.amwc {
        let Ok(transformed) = apply_bijection(&games[inst.game], &inst.bijection) else {
            continue;
        };
        report.amwc_checked += 1;
        let (i, j) = (inst.bijection.i(), inst.bijection.j());
        let before = PairOrder::of(&rankings[inst.game], i, j);
        let after = PairOrder::of(&solution.rank(&transformed), i, j);
        if before != after {
            report.amwc_failures.push(PairFinding {
                game: inst.game,
                i,
                j,
                before,
                after,
                instance: inst.bijection.to_string(),
            });
        }
    }
    for inst in &instances.ilmwc {
        let Ok(extended) = extend_with_larger(&games[inst.game], inst.i, inst.j, &inst.family)
        else {
            continue;
        };
        report.ilmwc_checked += 1;
        let before = PairOrder::of(&rankings[inst.game], inst.i, inst.j);
        if before != PairOrder::Above {
            continue;
        }
        let after = PairOrder::of(&solution.rank(&extended), inst.i, inst.j);
        if after != PairOrder::Above {
            report.ilmwc_failures.push(PairFinding {
                game: inst.game,
                i: inst.i,
                j: inst.j,
                before,
                after,
                instance: inst.family.to_string(),
            });
        }
    }
    report
}
