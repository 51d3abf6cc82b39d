mod common;

use ehf_core::solvers::{brute_force, solve_on_td, validate_solution, Problem};
use ehf_core::treedec::{min_fill_order, td_from_elimination};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn dp_matches_brute_force(g in common::graph(0, 10), r in 1usize..5) {
        let td = td_from_elimination(&g, &min_fill_order(&g));
        let mut problems = Problem::ALL_SET_PROBLEMS.to_vec();
        problems.extend([Problem::RColoring(r), Problem::Coloring]);
        for p in problems {
            let a = solve_on_td(&g, p, &td).unwrap();
            let b = brute_force(&g, p).unwrap();
            prop_assert_eq!(a.value, b.value, "{}", p);
            prop_assert_eq!(a.feasible, b.feasible);
            prop_assert!(validate_solution(&g, &a).is_ok());
        }
    }

    #[test]
    fn stable_set_and_cover_complement(g in common::graph(0, 12)) {
        let td = td_from_elimination(&g, &min_fill_order(&g));
        let s = solve_on_td(&g, Problem::StableSet, &td).unwrap().value;
        let c = solve_on_td(&g, Problem::VertexCover, &td).unwrap().value;
        prop_assert_eq!(s + c, g.n());
    }

    #[test]
    fn chromatic_number_is_the_threshold(g in common::graph(1, 10)) {
        let td = td_from_elimination(&g, &min_fill_order(&g));
        let chi = solve_on_td(&g, Problem::Coloring, &td).unwrap().value;
        prop_assert!(solve_on_td(&g, Problem::RColoring(chi), &td).unwrap().feasible);
        if chi > 1 {
            prop_assert!(!solve_on_td(&g, Problem::RColoring(chi - 1), &td).unwrap().feasible);
        }
    }
}
