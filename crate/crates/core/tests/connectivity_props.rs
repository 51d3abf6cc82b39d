mod common;

use ehf_core::connectivity::{gyarfas_path, is_balanced_separator, max_banana, min_separator};
use ehf_core::hubpart::{check_partition, hub_dimension, hub_partition, HdimSearch};
use ehf_core::structures::hubs;
use ehf_core::weights::half;
use ehf_core::{Budget, VertexSet, WeightFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn banana_equals_separator(g in common::graph(2, 12), a in 0usize..12, b in 0usize..12) {
        let (a, b) = (a % g.n(), b % g.n());
        prop_assume!(a != b && !g.has_edge(a, b));
        let ban = max_banana(&g, a, b).unwrap();
        let sep = min_separator(&g, a, b).unwrap();
        prop_assert_eq!(ban.k, sep.len());
        prop_assert!(ban.validate(&g).is_ok());
        prop_assert!(g.shortest_path(a, b, |v| !sep.contains(v)).is_none());
    }

    #[test]
    fn gyarfas_path_balances(gw in common::weighted(1, 12)) {
        let (g, raw) = gw;
        prop_assume!(g.is_connected());
        let w = WeightFunction::normalized_integers(&raw).unwrap();
        let p = gyarfas_path(&g, &w).unwrap();
        prop_assert!(g.is_induced_path(p.vertices()));
        let closed = g.neighborhood(&VertexSet::from_vec(p.vertices().to_vec()), true).unwrap();
        prop_assert!(is_balanced_separator(&g, &w, &closed, &half()).unwrap().balanced);
    }

    #[test]
    fn hub_partitions_hold(g in common::graph(2, 10)) {
        let h = hubs(&g, &mut Budget::unlimited()).hubs;
        let p = hub_partition(&g, 0, 1, &h).unwrap();
        let mut set = h.clone();
        set.remove(0);
        set.remove(1);
        prop_assert!(check_partition(&g, &p, &set).is_ok());
        for layer in &p.layers {
            prop_assert!(g.is_stable(layer.as_slice()));
        }
    }

    #[test]
    fn isolated_vertices_keep_hub_dimension(g in common::graph(2, 9)) {
        let d0 = hub_dimension(&g, 0, 1, HdimSearch::Exhaustive, None, &mut Budget::unlimited()).unwrap();
        let d1 = hub_dimension(&g.with_isolated(1), 0, 1, HdimSearch::Exhaustive, Some(d0.d), &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(d0.k, d1.k);
        prop_assert_eq!(d0.hubs, d1.hubs);
    }
}
