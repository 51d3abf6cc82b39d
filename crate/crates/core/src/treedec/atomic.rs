//! `k`-atomic tree decompositions: adhesion below `k` and lexicographically
//! minimum fatness.
//!
//! The exhaustive mode searches canonical decompositions only. Rooted at a
//! node with bag `B`, every child subtree can be trimmed so that it covers
//! exactly one component `D` of what lies below `B` plus its attachment
//! `N(D)`, with `N(D)` inside the child's bag and some vertex of `D` in it
//! too. Trimming never makes the fatness worse, so the minimum over
//! canonical shapes is the global minimum. That gives a memoised recursion
//! over vertex sets `U` (with `S = N(U)`): choose `B' ⊆ U` non-empty, put
//! `S ∪ B'` in the root and recurse into each component of `U \ B'`.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use super::exact::{min_fill_order, td_from_elimination};
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Guardrail for exhaustive mode.
pub const ATOMIC_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomicMode {
    Exhaustive,
    /// Min-fill decomposition with large adhesions contracted. No
    /// optimality claim.
    Heuristic,
}

#[derive(Clone, Debug, Serialize)]
pub struct AtomicTd {
    pub td: TreeDecomposition,
    pub mode: AtomicMode,
    /// `(a_n, ..., a_0)`.
    pub fatness: Vec<usize>,
}

pub fn atomic_td(g: &Graph, k: usize, mode: AtomicMode) -> Result<AtomicTd> {
    let td = match mode {
        AtomicMode::Exhaustive => {
            if g.n() > ATOMIC_MAX_N {
                return Err(Error::Guardrail(format!(
                    "exhaustive atomic decomposition limited to n <= {ATOMIC_MAX_N}, got {}",
                    g.n()
                )));
            }
            exhaustive(g, k)
        }
        AtomicMode::Heuristic => heuristic(g, k),
    };
    let fatness = td.fatness(g.n());
    Ok(AtomicTd { td, mode, fatness })
}

type Fat = [u16; ATOMIC_MAX_N + 1];

fn fat_cmp(a: &Fat, b: &Fat) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

#[derive(Clone)]
struct Plan {
    fat: Fat,
    /// Root bag `S ∪ B'`.
    bag: u64,
    /// Components below the root, each decomposed by its own plan.
    parts: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    memo: HashMap<u64, Plan>,
}

impl Search<'_> {
    fn open_nbhd(&self, u: u64) -> u64 {
        let mut s = 0;
        for v in crate::graph::mask_iter(u) {
            s |= self.g.nbr_mask(v);
        }
        s & !u
    }

    fn best(&mut self, u: u64) -> Plan {
        if let Some(p) = self.memo.get(&u) {
            return p.clone();
        }
        let s = self.open_nbhd(u);
        let mut best: Option<Plan> = None;
        // Submasks of `u` in increasing order.
        let mut b = 0u64;
        loop {
            b = b.wrapping_sub(u) & u;
            if b == 0 {
                break;
            }
            let bag = s | b;
            let size = bag.count_ones() as usize;
            if let Some(cur) = &best {
                // Children only add to the root's count, so a root bag that
                // already loses on its own can be skipped.
                let mut lone = [0u16; ATOMIC_MAX_N + 1];
                lone[size] = 1;
                if fat_cmp(&lone, &cur.fat) != Ordering::Less {
                    continue;
                }
            }
            let parts = self.g.components_mask(u & !b);
            if parts.iter().any(|&d| self.open_nbhd(d).count_ones() as usize >= self.k) {
                continue;
            }
            let mut fat = [0u16; ATOMIC_MAX_N + 1];
            fat[size] = 1;
            for &d in &parts {
                let sub = self.best(d);
                for (f, x) in fat.iter_mut().zip(sub.fat.iter()) {
                    *f += x;
                }
            }
            if best.as_ref().is_none_or(|cur| fat_cmp(&fat, &cur.fat) == Ordering::Less) {
                best = Some(Plan { fat, bag, parts });
            }
        }
        let plan = best.expect("B' = U is always admissible");
        self.memo.insert(u, plan.clone());
        plan
    }

    fn build(&mut self, u: u64, bags: &mut Vec<VertexSet>, edges: &mut Vec<(usize, usize)>) -> usize {
        let plan = self.best(u);
        let me = bags.len();
        bags.push(VertexSet::from_mask(plan.bag));
        for d in plan.parts {
            let child = self.build(d, bags, edges);
            edges.push((me, child));
        }
        me
    }
}

fn exhaustive(g: &Graph, k: usize) -> TreeDecomposition {
    if g.n() == 0 || k == 0 {
        // With k = 0 no tree edge is allowed at all.
        return TreeDecomposition::single_bag(VertexSet::range(g.n()));
    }
    let mut search = Search { g, k, memo: HashMap::new() };
    let mut bags = Vec::new();
    let mut edges = Vec::new();
    // Components of G decompose independently; chain their roots with
    // empty adhesions.
    let mut prev: Option<usize> = None;
    for c in g.components_mask(g.full_mask()) {
        let root = search.build(c, &mut bags, &mut edges);
        if let Some(p) = prev {
            edges.push((p, root));
        }
        prev = Some(root);
    }
    TreeDecomposition::new(bags, edges).expect("canonical construction is a tree")
}

fn heuristic(g: &Graph, k: usize) -> TreeDecomposition {
    let mut td = td_from_elimination(g, &min_fill_order(g)).compress();
    while let Some(&(u, v)) = td.edges().iter().find(|&&(u, v)| td.adhesion(u, v).len() >= k) {
        td = contract(&td, u, v);
    }
    td
}

/// Merges tree edge `uv` into one node with bag `χ(u) ∪ χ(v)`.
fn contract(td: &TreeDecomposition, u: usize, v: usize) -> TreeDecomposition {
    let (keep, drop) = (u.min(v), u.max(v));
    let fix = |t: usize| {
        let t = if t == drop { keep } else { t };
        if t > drop {
            t - 1
        } else {
            t
        }
    };
    let mut bags: Vec<VertexSet> = Vec::with_capacity(td.len() - 1);
    for (t, b) in td.bags().iter().enumerate() {
        if t == drop {
            continue;
        }
        bags.push(if t == keep { b.union(td.bag(drop)) } else { b.clone() });
    }
    let edges = td
        .edges()
        .iter()
        .filter(|&&e| e != (u, v) && e != (v, u))
        .map(|&(a, b)| (fix(a), fix(b)))
        .collect();
    TreeDecomposition::new(bags, edges).expect("contraction keeps a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn bowtie_splits() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let a = atomic_td(&g, 2, AtomicMode::Exhaustive).unwrap();
        let mut bags: Vec<Vec<usize>> = a.td.bags().iter().map(|b| b.as_slice().to_vec()).collect();
        bags.sort();
        assert_eq!(bags, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(a.td.max_adhesion(), 1);
    }

    #[test]
    fn k4_single_bag() {
        for k in 1..=4 {
            let a = atomic_td(&complete(4), k, AtomicMode::Exhaustive).unwrap();
            assert_eq!(a.td.len(), 1);
        }
    }

    #[test]
    fn edgeless_singletons() {
        let a = atomic_td(&Graph::empty(3), 1, AtomicMode::Exhaustive).unwrap();
        assert_eq!(a.td.len(), 3);
        assert!(a.td.bags().iter().all(|b| b.len() == 1));
        assert_eq!(a.fatness, vec![0, 0, 3, 0]);
    }

    #[test]
    fn path_and_cycle() {
        let a = atomic_td(&path(5), 2, AtomicMode::Exhaustive).unwrap();
        assert_eq!(a.td.width(), 1);
        assert!(a.td.validate(&path(5)).valid);
        let c = cycle(6);
        let a = atomic_td(&c, 3, AtomicMode::Exhaustive).unwrap();
        assert_eq!(a.td.width(), 2);
        assert!(a.td.is_tight(&c).unwrap());
        assert!(a.td.is_k_lean(&c, 3, false).unwrap().lean);
        // Adhesion below 2 cannot split a cycle.
        assert_eq!(atomic_td(&c, 2, AtomicMode::Exhaustive).unwrap().td.len(), 1);
    }

    #[test]
    fn heuristic_respects_adhesion() {
        let g = grid(3, 4);
        for k in 1..=4 {
            let a = atomic_td(&g, k, AtomicMode::Heuristic).unwrap();
            assert!(a.td.validate(&g).valid);
            assert!(a.td.max_adhesion() < k || a.td.len() == 1);
        }
        assert!(matches!(atomic_td(&grid(4, 4), 2, AtomicMode::Exhaustive), Err(Error::Guardrail(_))));
    }
}
