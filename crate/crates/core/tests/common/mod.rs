//! Brute-force reference implementations. Everything here works on raw `u64`
//! masks and scans all 2^n coalitions, so it shares no code with the library
//! beyond reading a game's minimal winning coalitions.

#![allow(dead_code)]

use num_rational::BigRational;
use simplegames::{Coalition, SimpleGame, WeightedGame};

pub fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mwc_bits(game: &SimpleGame) -> Vec<u64> {
    game.mwc().iter().map(|c| c.bits()).collect()
}

/// Winning test straight from a list of minimal winning masks.
pub fn wins(mwc: &[u64], s: u64) -> bool {
    mwc.iter().any(|&m| m & !s == 0)
}

/// Minimal sets of a monotone predicate, in (size, bits) order.
pub fn minimal_sets(n: usize, pred: impl Fn(u64) -> bool) -> Vec<u64> {
    let mut out: Vec<u64> = (0..=full(n))
        .filter(|&s| pred(s) && (0..n).all(|p| s & (1 << p) == 0 || !pred(s & !(1 << p))))
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

pub fn brute_mwc_weighted(wg: &WeightedGame) -> Vec<u64> {
    let n = wg.n();
    let w = wg.weights();
    minimal_sets(n, |s| {
        let total: u64 = (0..n).filter(|p| s & (1 << p) != 0).map(|p| w[p]).sum();
        total >= wg.quota()
    })
}

/// v*(S) = v(N) - v(N \ S), evaluated on every coalition.
pub fn brute_dual(game: &SimpleGame) -> Vec<u64> {
    let n = game.n();
    let mwc = mwc_bits(game);
    let all = full(n);
    minimal_sets(n, |s| wins(&mwc, all) && !wins(&mwc, all & !s))
}

/// Minimal sets meeting every minimal winning coalition.
pub fn brute_hitting_sets(game: &SimpleGame) -> Vec<u64> {
    let mwc = mwc_bits(game);
    minimal_sets(game.n(), |s| mwc.iter().all(|&m| m & s != 0))
}

/// i ⪰ j: for every S ⊆ N \ {i, j}, S ∪ {j} winning implies S ∪ {i} winning.
pub fn brute_weakly(game: &SimpleGame, i: usize, j: usize) -> bool {
    let mwc = mwc_bits(game);
    let rest = full(game.n()) & !(1 << i) & !(1 << j);
    let mut s = rest;
    loop {
        if wins(&mwc, s | 1 << j) && !wins(&mwc, s | 1 << i) {
            return false;
        }
        if s == 0 {
            return true;
        }
        s = (s - 1) & rest;
    }
}

/// Counts per coalition size 1..=n of the sets containing `player`.
pub fn size_counts(n: usize, sets: &[u64], player: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    for &s in sets {
        if s & (1 << player) != 0 {
            v[s.count_ones() as usize - 1] += 1;
        }
    }
    v
}

pub fn brute_pgi(game: &SimpleGame) -> Vec<BigRational> {
    let n = game.n();
    let mwc = mwc_bits(game);
    let counts: Vec<i64> = (0..n)
        .map(|p| mwc.iter().filter(|&&m| m & (1 << p) != 0).count() as i64)
        .collect();
    let total: i64 = counts.iter().sum();
    counts
        .iter()
        .map(|&c| BigRational::new(c.into(), total.into()))
        .collect()
}

pub fn brute_dpi(game: &SimpleGame) -> Vec<BigRational> {
    let n = game.n();
    let mwc = mwc_bits(game);
    let k = mwc.len() as i64;
    (0..n)
        .map(|p| {
            mwc.iter()
                .filter(|&&m| m & (1 << p) != 0)
                .map(|&m| BigRational::new(1.into(), (k * m.count_ones() as i64).into()))
                .fold(BigRational::from_integer(0.into()), |a, b| a + b)
        })
        .collect()
}

/// Expected weak order from per-player keys, larger key ranks higher.
pub fn weakly_by_keys<K: Ord>(keys: &[K], i: usize, j: usize) -> bool {
    keys[i] >= keys[j]
}

pub fn labels(bits: &[u64]) -> Vec<Vec<usize>> {
    bits.iter()
        .map(|&b| (0..64).filter(|p| b & (1 << p) != 0).map(|p| p + 1).collect())
        .collect()
}

pub fn coalition(n: usize, bits: u64) -> Coalition {
    Coalition::from_bits(n, bits).unwrap()
}

pub fn game(n: usize, sets: &[&[usize]]) -> SimpleGame {
    SimpleGame::from_labels(n, sets).unwrap()
}

pub fn example1() -> SimpleGame {
    game(5, &[&[1, 2], &[1, 3], &[3, 4], &[2, 4, 5], &[1, 4, 5]])
}

pub fn nomon() -> WeightedGame {
    WeightedGame::new(vec![4, 2, 1, 1, 1], 6).unwrap()
}
