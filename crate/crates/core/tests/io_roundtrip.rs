mod common;

use ehf_core::io::{parse_graph, parse_graph_as, parse_td, parse_weights, write_graph, write_td, write_weights, GraphFormat};
use ehf_core::treedec::{min_fill_order, td_from_elimination};
use ehf_core::WeightFunction;
use proptest::prelude::*;

proptest! {
    #[test]
    fn graphs_survive_every_format(g in common::graph(0, 14)) {
        for f in [GraphFormat::Edgelist, GraphFormat::Dimacs, GraphFormat::Pace] {
            let text = write_graph(&g, f);
            let back = parse_graph_as(&text, f).unwrap();
            prop_assert_eq!(back.n(), g.n());
            prop_assert_eq!(back.edges(), g.edges());
            if g.n() > 0 {
                prop_assert_eq!(parse_graph(&text).unwrap().edges(), g.edges());
            }
        }
    }

    #[test]
    fn decompositions_survive_pace_td(g in common::graph(1, 12)) {
        let td = td_from_elimination(&g, &min_fill_order(&g));
        let (back, n) = parse_td(&write_td(&td, g.n())).unwrap();
        prop_assert_eq!(n, g.n());
        prop_assert_eq!(back.bags(), td.bags());
        prop_assert!(back.validate(&g).valid);
    }

    #[test]
    fn weights_survive(gw in common::weighted(1, 12)) {
        let (g, raw) = gw;
        let w = WeightFunction::normalized_integers(&raw).unwrap();
        let back = parse_weights(&write_weights(&w), g.n()).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(back.weight(v), w.weight(v));
        }
    }

    #[test]
    fn parsers_never_panic(text in "[0-9a-z \\n\\-]{0,80}") {
        let _ = parse_graph(&text);
        let _ = parse_td(&text);
        let _ = parse_weights(&text, 5);
    }
}
