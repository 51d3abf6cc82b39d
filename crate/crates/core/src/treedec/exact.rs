//! Exact treewidth by dynamic programming over vertex subsets, and the
//! min-fill heuristic with simple lower bounds above the guardrail.

use serde::Serialize;

use super::TreeDecomposition;
use crate::graph::{Graph, VertexSet};
use crate::search::Budget;

/// Largest host solved exactly.
pub const EXACT_TW_MAX_N: usize = 20;

#[derive(Clone, Debug, Serialize)]
pub struct TwResult {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    /// Decomposition of width `upper`.
    pub td: TreeDecomposition,
}

impl TwResult {
    /// The treewidth when it was determined exactly.
    pub fn width(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

/// Exact treewidth for `n <= EXACT_TW_MAX_N` when the budget covers the
/// `n * 2^n` table work; otherwise a bounds pair with `exact = false`.
pub fn treewidth_exact(g: &Graph, budget: &mut Budget) -> TwResult {
    let n = g.n();
    if n <= EXACT_TW_MAX_N {
        let work = (n as u64) << n;
        if work <= budget.remaining() {
            budget.charge(work);
            let (width, order) = subset_dp(g);
            let td = td_from_elimination(g, &order);
            debug_assert_eq!(td.width(), width);
            return TwResult { lower: width, upper: width, exact: true, td };
        }
    }
    bounds(g, budget)
}

fn bounds(g: &Graph, budget: &mut Budget) -> TwResult {
    let td = td_from_elimination(g, &min_fill_order(g));
    let upper = td.width();
    let clique = g.clique_number(budget.remaining().min(1_000_000));
    let lower = clique.size.saturating_sub(1).max(g.degeneracy_order().1).min(upper);
    TwResult { lower, upper, exact: lower == upper, td: td.compress() }
}

/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` is the
/// set of vertices outside `S + v` reachable from `v` through `S`.
fn subset_dp(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.nbr_mask(v) as u32).collect();
    let q = |s: u32, v: usize| -> u32 {
        let within = s | (1 << v);
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        let mut out = 0u32;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            out |= nbr[u];
            let fresh = nbr[u] & within & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        (out & !within).count_ones()
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let here = tw[prev as usize].max(q(prev, v) as u8);
            best = best.min(here);
        }
        tw[s as usize] = best;
    }
    // Walk back down: the last vertex eliminated comes first.
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = (0..n)
            .find(|&v| {
                s & (1 << v) != 0 && {
                    let prev = s & !(1 << v);
                    tw[prev as usize].max(q(prev, v) as u8) == tw[s as usize]
                }
            })
            .expect("an optimal choice exists");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    (tw[full as usize] as usize, order)
}

/// Elimination order by fewest fill edges, then lowest degree, then id.
pub fn min_fill_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                fill += nb[i + 1..].iter().filter(|&&b| !adj[a][b]).count();
            }
            let key = (fill, nb.len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        let v = best.expect("a live vertex remains").2;
        let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
        for &a in &nb {
            for &b in &nb {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        alive[v] = false;
        order.push(v);
    }
    order
}

/// The decomposition of an elimination order: one bag `{v} ∪ later
/// neighbours in the filled graph` per vertex, hung below the earliest of
/// those neighbours.
pub fn td_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    assert_eq!(order.len(), n, "order must list every vertex once");
    if n == 0 {
        return TreeDecomposition::single_bag(VertexSet::new());
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut later: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    for (u, v) in g.edges() {
        if pos[u] < pos[v] {
            later[u].insert(v);
        } else {
            later[v].insert(u);
        }
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_root: Option<usize> = None;
    for (i, &v) in order.iter().enumerate() {
        let hv: Vec<usize> = later[v].iter().copied().collect();
        for &a in &hv {
            for &b in &hv {
                if a != b && pos[a] < pos[b] {
                    later[a].insert(b);
                }
            }
        }
        let mut bag = hv.clone();
        bag.push(v);
        bags.push(VertexSet::from_vec(bag));
        match hv.iter().map(|&u| pos[u]).min() {
            Some(p) => edges.push((i, p)),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    TreeDecomposition::new(bags, edges).expect("elimination forest chained into a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn tw(g: &Graph) -> usize {
        let r = treewidth_exact(g, &mut Budget::unlimited());
        assert!(r.exact);
        assert!(r.td.validate(g).valid);
        assert_eq!(r.td.width(), r.upper);
        r.upper
    }

    #[test]
    fn examples() {
        assert_eq!(tw(&path(6)), 1);
        assert_eq!(tw(&star(5)), 1);
        assert_eq!(tw(&complete(5)), 4);
        assert_eq!(tw(&grid(3, 3)), 3);
        assert_eq!(tw(&cycle(7)), 2);
        assert_eq!(tw(&petersen()), 4);
        assert_eq!(tw(&Graph::empty(3)), 0);
        assert_eq!(tw(&Graph::empty(0)), 0);
    }

    #[test]
    fn bounds_mode() {
        let g = grid(5, 5);
        let r = treewidth_exact(&g, &mut Budget::new(1000));
        assert!(r.lower <= 5 && 5 <= r.upper);
        assert!(r.td.validate(&g).valid);
        let g = grid(3, 8);
        let r = treewidth_exact(&g, &mut Budget::unlimited());
        assert!(r.td.validate(&g).valid);
        assert!(r.upper >= 3);
    }

    #[test]
    fn min_fill_on_chordal_is_perfect() {
        // A chordal graph: triangles glued along edges.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let td = td_from_elimination(&g, &min_fill_order(&g));
        assert_eq!(td.width(), 2);
    }
}
