mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simplegames::axioms::{check_dm, Solution};
use simplegames::corpus::random_antichain_game;
use simplegames::{
    criticality_ranking, desirability_matrix, dpi, game_from_weighted, lpgr, pgi, theta,
    theta_star, weakly_desirable, PairRelation, SimpleGame, WeightedGame,
};

fn weighted_game(max_n: usize) -> impl Strategy<Value = WeightedGame> {
    prop::collection::vec(0u64..9, 1..=max_n)
        .prop_filter("some positive weight", |w| w.iter().any(|&x| x > 0))
        .prop_flat_map(|w| {
            let total: u64 = w.iter().sum();
            (Just(w), 1..=total)
        })
        .prop_map(|(w, q)| WeightedGame::new(w, q).unwrap())
}

fn antichain_game(max_n: usize) -> impl Strategy<Value = SimpleGame> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        random_antichain_game(&mut ChaCha8Rng::seed_from_u64(seed), n)
    })
}

fn any_game(max_n: usize) -> impl Strategy<Value = SimpleGame> {
    prop_oneof![weighted_game(max_n).prop_map(|w| w.to_simple()), antichain_game(max_n)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weighted_enumeration_matches_brute_force(wg in weighted_game(12)) {
        let g = game_from_weighted(&wg);
        prop_assert_eq!(mwc_bits(&g), brute_mwc_weighted(&wg));
        prop_assert!(g.mwc().is_antichain());
    }

    #[test]
    fn dual_matches_definition_and_hitting_sets(g in any_game(8)) {
        let d = g.dual();
        prop_assert_eq!(mwc_bits(&d), brute_dual(&g));
        prop_assert_eq!(mwc_bits(&d), brute_hitting_sets(&g));
        prop_assert_eq!(d.mwc(), &g.minimal_blocking());
    }

    #[test]
    fn dual_is_an_involution(g in any_game(10)) {
        prop_assert_eq!(g.dual().dual(), g);
    }

    #[test]
    fn desirability_matches_brute_force(g in any_game(8)) {
        let n = g.n();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert_eq!(weakly_desirable(&g, i, j).unwrap(), brute_weakly(&g, i, j),
                        "pair ({}, {}) in {}", i + 1, j + 1, g.mwc());
                }
            }
        }
    }

    #[test]
    fn dual_preserves_weak_desirability(g in any_game(8)) {
        let d = g.dual();
        for i in 0..g.n() {
            for j in 0..g.n() {
                if i != j {
                    prop_assert_eq!(weakly_desirable(&g, i, j).unwrap(), weakly_desirable(&d, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn weighted_games_are_total_and_weight_monotone(wg in weighted_game(10)) {
        let g = wg.to_simple();
        prop_assert!(desirability_matrix(&g).is_total());
        let r = lpgr(&g);
        let w = wg.weights();
        for i in 0..g.n() {
            for j in 0..g.n() {
                if w[i] >= w[j] {
                    prop_assert!(r.weakly(i, j), "w{} >= w{} but ranked below", i + 1, j + 1);
                    if i != j {
                        prop_assert!(weakly_desirable(&g, i, j).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn total_relation_makes_rankings_agree(g in any_game(8)) {
        if desirability_matrix(&g).is_total() {
            prop_assert_eq!(lpgr(&g), criticality_ranking(&g));
        }
    }

    #[test]
    fn theta_vectors_and_rankings_match_counts(g in any_game(8)) {
        let n = g.n();
        let mwc = mwc_bits(&g);
        let blocking = brute_hitting_sets(&g);
        let t: Vec<Vec<u64>> = (0..n).map(|p| size_counts(n, &mwc, p)).collect();
        let ts: Vec<Vec<u64>> = (0..n).map(|p| size_counts(n, &blocking, p)).collect();
        let d = g.dual();
        let (r, c) = (lpgr(&g), criticality_ranking(&g));
        for p in 0..n {
            prop_assert_eq!(&theta(&g, p).unwrap().counts, &t[p]);
            prop_assert_eq!(&theta_star(&g, p).unwrap().counts, &ts[p]);
            prop_assert_eq!(theta_star(&g, p).unwrap().counts, theta(&d, p).unwrap().counts);
            for q in 0..n {
                prop_assert_eq!(r.weakly(p, q), weakly_by_keys(&t, p, q));
                prop_assert_eq!(c.weakly(p, q), weakly_by_keys(&ts, p, q));
            }
        }
        prop_assert_eq!(lpgr(&d), c);
    }

    #[test]
    fn indices_match_brute_force_and_sum_to_one(g in any_game(8)) {
        let p: Vec<_> = pgi(&g).into_iter().map(|x| x.as_ratio().clone()).collect();
        let d: Vec<_> = dpi(&g).into_iter().map(|x| x.as_ratio().clone()).collect();
        prop_assert_eq!(&p, &brute_pgi(&g));
        prop_assert_eq!(&d, &brute_dpi(&g));
        let one = num_rational::BigRational::from_integer(1.into());
        prop_assert_eq!(p.iter().cloned().sum::<num_rational::BigRational>(), one.clone());
        prop_assert_eq!(d.iter().cloned().sum::<num_rational::BigRational>(), one);
    }

    #[test]
    fn lpgr_respects_desirability(g in any_game(8)) {
        prop_assert!(check_dm(&Solution::Lpgr, &g).is_empty());
        let m = desirability_matrix(&g);
        let r = lpgr(&g);
        for i in 0..g.n() {
            for j in 0..g.n() {
                match m.get(i, j) {
                    PairRelation::Equivalent => prop_assert!(r.indifferent(i, j)),
                    PairRelation::StrictlyMore => prop_assert!(r.strictly(i, j)),
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn example1_blocking_family_is_hitting_family() {
    let g = example1();
    assert_eq!(
        labels(&brute_hitting_sets(&g)),
        vec![vec![1, 4], vec![1, 2, 3], vec![2, 3, 4], vec![1, 3, 5], vec![2, 3, 5]]
    );
    assert_eq!(mwc_bits(&g.dual()), brute_hitting_sets(&g));
}

#[test]
fn weighted_example_mwc() {
    let wg = nomon();
    assert_eq!(
        labels(&brute_mwc_weighted(&wg)),
        vec![vec![1, 2], vec![1, 3, 4], vec![1, 3, 5], vec![1, 4, 5]]
    );
    assert_eq!(mwc_bits(&wg.to_simple()), brute_mwc_weighted(&wg));
}

#[test]
fn twelve_player_weighted_game() {
    let wg = WeightedGame::new(vec![7, 6, 5, 5, 4, 3, 3, 2, 2, 1, 1, 1], 21).unwrap();
    assert_eq!(mwc_bits(&wg.to_simple()), brute_mwc_weighted(&wg));
}
