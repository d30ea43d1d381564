mod common;

use common::{random_combination, random_poly, random_quiver};
use pathgb_core::dsl::parse_polynomial;
use pathgb_core::groebner::{overlap_target, overlap_witnesses, s_polynomial};
use pathgb_core::{
    buchberger, is_groebner, membership_oracle, CompletionOptions, GbStatus, GeneratorSet, Limits,
    OracleVerdict, OrderKind, PathOrder, Polynomial, Reducer, Side,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SIDES: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

fn order_for(seed: u64) -> PathOrder {
    if seed.is_multiple_of(2) {
        PathOrder::new(OrderKind::LenLlex)
    } else {
        PathOrder::new(OrderKind::LenRlex)
    }
}

fn options() -> CompletionOptions {
    CompletionOptions {
        limits: Limits {
            max_iterations: 12,
            max_path_length: 8,
        },
        ..CompletionOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn division_is_a_standard_representation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, seed % 3 == 0);
        let paths = q.paths_up_to(4);
        let order = order_for(seed);
        let g = random_poly(&mut rng, &paths, 6, false);
        let divisors: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &paths, 3, false)).collect();
        for side in SIDES {
            let rep = Reducer::new(order, side).divide(&g, &divisors).unwrap();
            prop_assert_eq!(rep.check(&g, &order), Ok(()));
            for pair in rep.sweep_leads.windows(2) {
                prop_assert!(order.less(&pair[1], &pair[0]));
            }
        }
    }

    #[test]
    fn reduce_total_is_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, false);
        let paths = q.paths_up_to(3);
        let order = order_for(seed);
        let g = random_poly(&mut rng, &paths, 5, false);
        let divisors: Vec<Polynomial> = (0..2).map(|_| random_poly(&mut rng, &paths, 2, false)).collect();
        for side in SIDES {
            let r = Reducer::new(order, side);
            let once = r.reduce_total(&g, &divisors).unwrap();
            prop_assert_eq!(r.reduce_total(&once, &divisors).unwrap(), once);
        }
    }

    #[test]
    fn set_reduce_is_reduced_and_generates_the_same_ideal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, true);
        let paths = q.paths_up_to(3);
        let order = order_for(seed);
        let set: Vec<Polynomial> = (0..4).map(|_| random_poly(&mut rng, &paths, 3, false)).collect();
        for side in SIDES {
            let r = Reducer::new(order, side);
            let out = r.set_reduce(&set).unwrap();
            prop_assert!(r.is_reduced_set(&out).unwrap());
            prop_assert!(out.iter().all(|f| f.is_monic(&order)));
            for f in &set {
                prop_assert_eq!(membership_oracle(&q, f, &out, side, 3), OracleVerdict::Member);
            }
            for f in &out {
                prop_assert_eq!(membership_oracle(&q, f, &set, side, 3), OracleVerdict::Member);
            }
        }
    }

    #[test]
    fn s_polynomials_cancel_the_common_multiple(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, false);
        let paths = q.paths_up_to(4);
        let order = order_for(seed);
        let f = random_poly(&mut rng, &paths, 3, true);
        let g = random_poly(&mut rng, &paths, 3, true);
        let (lf, lg) = (f.leading_monomial(&order).unwrap(), g.leading_monomial(&order).unwrap());
        for side in SIDES {
            for w in overlap_witnesses(&lf, &lg, side, false) {
                let m = overlap_target(&lf, &lg, &w).unwrap();
                let s = s_polynomial(&f, &g, &w, &order).unwrap();
                if let Ok(ls) = s.leading_monomial(&order) {
                    prop_assert!(order.less(&ls, &m));
                }
            }
        }
    }

    #[test]
    fn completed_bases_certify_and_absorb_combinations(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, seed % 4 != 0);
        let paths = q.paths_up_to(3);
        let order = order_for(seed);
        let side = SIDES[(seed % 3) as usize];
        let gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &paths, 2, false)).collect();
        let res = buchberger(&GeneratorSet::new(gens.clone(), side), &order, &options()).unwrap();
        prop_assume!(matches!(res.status, GbStatus::Completed { .. }));
        prop_assert!(is_groebner(&res.basis, &order, side).unwrap().is_ok());
        let r = Reducer::new(order, side);
        for g in &gens {
            prop_assert!(r.reduce_total(g, &res.basis).unwrap().is_zero());
        }
        for _ in 0..10 {
            let c = random_combination(&mut rng, &paths, &gens, side, 3);
            prop_assert!(r.reduce_total(&c, &res.basis).unwrap().is_zero());
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, true);
        let paths = q.paths_up_to(3);
        let order = order_for(seed);
        let side = SIDES[(seed % 3) as usize];
        let mut gens: Vec<Polynomial> = (0..3).map(|_| random_poly(&mut rng, &paths, 3, false)).collect();
        let first = buchberger(&GeneratorSet::new(gens.clone(), side), &order, &options()).unwrap();
        gens.shuffle(&mut rng);
        let second = buchberger(&GeneratorSet::new(gens, side), &order, &options()).unwrap();
        prop_assert!(first.is_completed() && second.is_completed());
        prop_assert_eq!(first.basis, second.basis);
    }

    #[test]
    fn canonical_text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_quiver(&mut rng, false);
        let paths = q.paths_up_to(3);
        let order = order_for(seed);
        let p = random_poly(&mut rng, &paths, 5, false);
        let text = p.format(&q, &order);
        prop_assert_eq!(parse_polynomial(&q, &text).unwrap(), p);
    }
}
