//! Seeded random games for property suites and benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::{full_mask, Coalition};
use crate::game::{SimpleGame, WeightedGame};

/// Weights in `0..=max_weight` (at least one positive) and a quota drawn
/// uniformly from `1..=total`.
pub fn random_weighted_game<R: Rng + ?Sized>(rng: &mut R, n: usize, max_weight: u64) -> WeightedGame {
    let mut weights: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    if weights.iter().all(|&w| w == 0) {
        let k = rng.gen_range(0..n);
        weights[k] = 1;
    }
    let total: u64 = weights.iter().sum();
    let quota = rng.gen_range(1..=total);
    WeightedGame::new(weights, quota).expect("quota drawn within total weight")
}

/// Minimizes a handful of random non-empty coalitions. Each player joins a
/// coalition with a per-game density, so both sparse and dense games show up.
pub fn random_antichain_game<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SimpleGame {
    let density = *[0.3, 0.45, 0.6].choose(rng).unwrap();
    let count = rng.gen_range(1..=2 * n);
    let mut sets = Vec::with_capacity(count);
    while sets.len() < count {
        let bits = (0..n).fold(0u64, |b, p| if rng.gen_bool(density) { b | 1 << p } else { b });
        if bits != 0 {
            sets.push(Coalition::from_bits(n, bits & full_mask(n)).unwrap());
        }
    }
    SimpleGame::from_winning(n, sets).expect("non-empty coalitions")
}

#[derive(Debug, Clone)]
pub struct CorpusGame {
    pub game: SimpleGame,
    /// Present when the game came from weights and a quota.
    pub weighted: Option<WeightedGame>,
}

/// Alternates weighted and antichain games, with `n` drawn from `players`.
pub fn mixed_corpus(seed: u64, count: usize, players: RangeInclusive<usize>) -> Vec<CorpusGame> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let n = rng.gen_range(players.clone());
            if k % 2 == 0 {
                let wg = random_weighted_game(&mut rng, n, 6);
                CorpusGame {
                    game: wg.to_simple(),
                    weighted: Some(wg),
                }
            } else {
                CorpusGame {
                    game: random_antichain_game(&mut rng, n),
                    weighted: None,
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible() {
        let a = mixed_corpus(3, 40, 3..=8);
        let b = mixed_corpus(3, 40, 3..=8);
        assert_eq!(a.len(), 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.game, y.game);
            assert!((3..=8).contains(&x.game.n()));
        }
        assert_eq!(a.iter().filter(|c| c.weighted.is_some()).count(), 20);
    }
}
