mod common;

use ehf_core::treedec::{atomic_td, min_fill_order, td_from_elimination, treewidth_exact, AtomicMode};
use ehf_core::{Budget, WeightFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn elimination_tds_are_valid(g in common::graph(0, 14), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..g.n()).collect();
        // Deterministic shuffle from the seed.
        let mut s = seed | 1;
        for i in (1..order.len()).rev() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let td = td_from_elimination(&g, &order);
        let rep = td.validate(&g);
        prop_assert!(rep.valid, "{:?}", rep.violations);
        prop_assert!(td.clone().compress().validate(&g).valid);
    }

    #[test]
    fn exact_width_is_a_lower_envelope(g in common::graph(1, 12)) {
        let tw = treewidth_exact(&g, &mut Budget::unlimited());
        prop_assert!(tw.exact);
        prop_assert_eq!(tw.lower, tw.upper);
        prop_assert!(tw.td.validate(&g).valid);
        prop_assert_eq!(tw.td.width(), tw.upper);
        let heuristic = td_from_elimination(&g, &min_fill_order(&g)).width();
        prop_assert!(tw.upper <= heuristic);
        let omega = g.clique_number(u64::MAX).size;
        prop_assert!(tw.upper + 1 >= omega);
    }

    #[test]
    fn atomic_tds_are_lean_and_tight(g in common::graph(1, 8), k in 1usize..4) {
        let at = atomic_td(&g, k, AtomicMode::Exhaustive).unwrap();
        prop_assert!(at.td.validate(&g).valid);
        prop_assert!(at.td.is_tight(&g).unwrap());
        prop_assert!(at.td.is_k_lean(&g, k, true).unwrap().lean);
    }

    #[test]
    fn centre_is_a_centre(gw in common::weighted(1, 12)) {
        let (g, raw) = gw;
        let w = WeightFunction::normalized_integers(&raw).unwrap();
        let td = td_from_elimination(&g, &min_fill_order(&g));
        let t = td.center(&g, &w).unwrap();
        prop_assert!(td.is_center(&w, t));
    }
}
