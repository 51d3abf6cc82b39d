//! Lexicographically smallest witness by depth-first search over sorted
//! vertex subsets. Subsets are visited in lexicographic preorder, so the first
//! match is the smallest sorted vertex list. Pruning uses only hereditary
//! properties of each structure, which keeps the search exact.

use super::certificate::{Certificate, Kind, Target};
use super::recognize::{deg_in, recognize};
use crate::graph::{mask_iter, Graph};
use crate::search::Budget;

pub(crate) enum LexResult {
    Found(Certificate),
    None,
    OutOfBudget,
}

pub(crate) fn lex_min(g: &Graph, target: Target, budget: &mut Budget) -> LexResult {
    assert!(g.n() <= 64, "lexicographic search needs n <= 64");
    let mut search = Search { g, target, budget, out_of_budget: false };
    for v in 0..g.n() {
        if let Some(c) = search.dfs(1u64 << v, v) {
            return LexResult::Found(c);
        }
        if search.out_of_budget {
            return LexResult::OutOfBudget;
        }
    }
    LexResult::None
}

struct Search<'a> {
    g: &'a Graph,
    target: Target,
    budget: &'a mut Budget,
    out_of_budget: bool,
}

impl Search<'_> {
    fn dfs(&mut self, s: u64, last: usize) -> Option<Certificate> {
        if !self.budget.tick() {
            self.out_of_budget = true;
            return None;
        }
        match self.feasible(s) {
            Feasible::No => return None,
            Feasible::Closed => return recognize(self.g, s, self.target),
            Feasible::Open => {}
        }
        if let Some(c) = recognize(self.g, s, self.target) {
            return Some(c);
        }
        for v in last + 1..self.g.n() {
            if let Some(c) = self.dfs(s | (1u64 << v), v) {
                return Some(c);
            }
            if self.out_of_budget {
                return None;
            }
        }
        None
    }

    fn feasible(&self, s: u64) -> Feasible {
        let g = self.g;
        let degs = || mask_iter(s).map(move |v| (v, deg_in(g, v, s)));
        match self.target {
            Target::Kind(Kind::C4) | Target::Kind(Kind::EvenHole) => {
                if degs().any(|(_, d)| d > 2) {
                    return Feasible::No;
                }
                if self.target == Target::Kind(Kind::C4) && s.count_ones() > 4 {
                    return Feasible::No;
                }
                // A cycle in a max-degree-2 graph cannot grow into a hole.
                if has_cycle_deg2(g, s) {
                    Feasible::Closed
                } else {
                    Feasible::Open
                }
            }
            Target::Kind(Kind::Theta) => {
                let mut big = Vec::new();
                for (v, d) in degs() {
                    match d {
                        0..=2 => {}
                        3 => big.push(v),
                        _ => return Feasible::No,
                    }
                }
                if big.len() > 2 || (big.len() == 2 && g.has_edge(big[0], big[1])) || has_triangle(g, s) {
                    return Feasible::No;
                }
                Feasible::Open
            }
            Target::Kind(Kind::Prism) | Target::Kind(Kind::Pyramid) => {
                let cap = if self.target == Target::Kind(Kind::Prism) { 6 } else { 4 };
                let mut big = 0;
                for (_, d) in degs() {
                    match d {
                        0..=2 => {}
                        3 => big += 1,
                        _ => return Feasible::No,
                    }
                }
                if big > cap {
                    return Feasible::No;
                }
                if self.target == Target::Kind(Kind::Pyramid) && triangle_count(g, s) > 1 {
                    return Feasible::No;
                }
                Feasible::Open
            }
            Target::Kind(Kind::Wheel) | Target::EvenWheel => {
                // Some vertex (the centre, if present) leaves max degree 2.
                let big: Vec<usize> = degs().filter(|&(_, d)| d >= 4).map(|(v, _)| v).collect();
                if big.len() > 1 {
                    return Feasible::No;
                }
                let ok = |x: Option<usize>| {
                    let rest = match x {
                        Some(x) => s & !(1u64 << x),
                        None => s,
                    };
                    mask_iter(rest).all(|v| deg_in(g, v, rest) <= 2)
                };
                let any = match big.first() {
                    Some(&x) => ok(Some(x)),
                    None => ok(None) || mask_iter(s).any(|x| ok(Some(x))),
                };
                if any {
                    Feasible::Open
                } else {
                    Feasible::No
                }
            }
        }
    }
}

enum Feasible {
    No,
    /// No proper superset can match; only `s` itself is worth checking.
    Closed,
    Open,
}

fn has_cycle_deg2(g: &Graph, s: u64) -> bool {
    // In a graph of max degree 2, some component is a cycle iff edges
    // outnumber vertices minus components.
    let edges: u32 = mask_iter(s).map(|v| deg_in(g, v, s)).sum::<u32>() / 2;
    let comps = g.components_mask(s).len() as u32;
    edges + comps > s.count_ones()
}

fn triangle_count(g: &Graph, s: u64) -> usize {
    let mut count = 0;
    for u in mask_iter(s) {
        let nu = g.nbr_mask(u) & s & above(u);
        for v in mask_iter(nu) {
            count += (g.nbr_mask(v) & nu & above(v)).count_ones() as usize;
        }
    }
    count
}

/// Bits strictly above `v`.
fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

fn has_triangle(g: &Graph, s: u64) -> bool {
    triangle_count(g, s) > 0
}
