//! Turning a set `X` whose closed neighbourhood (plus a clique) balances
//! the weight into a balanced separator of size about `3L|X|`, using a
//! tight `3L`-lean decomposition.

use serde::Serialize;

use super::{TreeDecomposition, LEAN_MAX_N};
use crate::connectivity::flow::{disjoint_paths, lex_min_cut};
use crate::connectivity::is_balanced_separator;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weights::{half, WeightFunction};

#[derive(Clone, Debug, Serialize)]
pub struct Shrink {
    /// Centre node of the decomposition.
    pub t0: usize,
    /// Vertices that no set of fewer than `3L` vertices separates from
    /// the rest of the centre bag.
    pub k: VertexSet,
    pub k_is_clique: bool,
    /// `Δ(v)`: `v` plus a minimum separator between `v` and `χ(t0) \ v`.
    pub deltas: Vec<(usize, VertexSet)>,
    /// `K ∪ ⋃ Δ(v)`.
    pub y: VertexSet,
    pub balanced: bool,
    /// `|Y \ K| <= 3L|X|`.
    pub within_bound: bool,
    /// Whether leanness was verified (only up to the lean guardrail).
    pub lean_checked: bool,
}

/// Size of a smallest set avoiding `v` that meets every path from `v` to
/// `target \ v`; targets may themselves be in the set.
fn separation(g: &Graph, v: usize, target: &VertexSet) -> (usize, Vec<usize>) {
    let t: Vec<usize> = target.iter().filter(|&u| u != v).collect();
    let mut blocked = vec![false; g.n()];
    blocked[v] = true;
    let value = disjoint_paths(g, g.neighbors(v), &t, &blocked).value;
    (value, lex_min_cut(g, g.neighbors(v), &t, &blocked))
}

/// The friendly set `K` at `t0` for threshold `3L`.
pub fn friendly_set(g: &Graph, bag: &VertexSet, l: usize) -> VertexSet {
    (0..g.n()).filter(|&v| separation(g, v, bag).0 >= 3 * l).collect()
}

pub fn shrink_separator(g: &Graph, td: &TreeDecomposition, w: &WeightFunction, x: &VertexSet, l: usize) -> Result<Shrink> {
    g.check_set(x)?;
    w.check_normal_for(g)?;
    if l == 0 {
        return Err(Error::Input("L must be positive".into()));
    }
    if !td.is_tight(g)? {
        return Err(Error::Precondition("decomposition is not tight".into()));
    }
    let lean_checked = g.n() <= LEAN_MAX_N;
    if lean_checked {
        let r = td.is_k_lean(g, 3 * l, true)?;
        if let Some(v) = r.violation {
            return Err(Error::Precondition(format!("decomposition is not {}-lean: {v:?}", 3 * l)));
        }
    }
    let t0 = td.center(g, w)?;
    let bag = td.bag(t0);
    let k = friendly_set(g, bag, l);
    if let Some(v) = x.iter().find(|&v| k.contains(v)) {
        return Err(Error::Precondition(format!("X meets K at {v}")));
    }
    let around = k.union(&g.neighborhood(x, true)?);
    let pre = is_balanced_separator(g, w, &around, &half())?;
    if !pre.balanced {
        return Err(Error::Precondition(format!(
            "component {:?} of G \\ (K ∪ N[X]) has weight {} > 1/2",
            pre.heaviest_component, pre.heaviest
        )));
    }
    let mut y = k.clone();
    let mut deltas = Vec::new();
    for v in x {
        let (_, cut) = separation(g, v, bag);
        let mut d = VertexSet::from_vec(cut);
        d.insert(v);
        y = y.union(&d);
        deltas.push((v, d));
    }
    let balanced = is_balanced_separator(g, w, &y, &half())?.balanced;
    let within_bound = y.difference(&k).len() <= 3 * l * x.len();
    Ok(Shrink { t0, k_is_clique: g.is_clique(k.as_slice()), k, deltas, y, balanced, within_bound, lean_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::treedec::{atomic_td, AtomicMode};

    #[test]
    fn c10() {
        let g = cycle(10);
        let td = atomic_td(&g, 6, AtomicMode::Exhaustive).unwrap().td;
        let w = WeightFunction::uniform(10).unwrap();
        let x = VertexSet::from_vec(vec![0, 5]);
        let r = shrink_separator(&g, &td, &w, &x, 2).unwrap();
        assert!(r.balanced && r.within_bound && r.lean_checked);
        assert!(r.y.difference(&r.k).len() <= 12);
    }

    #[test]
    fn empty_x() {
        // In K4 every vertex is 3-linked to the rest of the only bag.
        let g = complete(4);
        let td = atomic_td(&g, 3, AtomicMode::Exhaustive).unwrap().td;
        let w = WeightFunction::uniform(4).unwrap();
        let r = shrink_separator(&g, &td, &w, &VertexSet::new(), 1).unwrap();
        assert_eq!(r.y, r.k);
        assert_eq!(r.k.len(), 4);
        assert!(r.balanced && r.k_is_clique);
    }

    #[test]
    fn heavy_component_rejected() {
        let g = path(9);
        let td = atomic_td(&g, 3, AtomicMode::Exhaustive).unwrap().td;
        let w = WeightFunction::uniform(9).unwrap();
        let r = shrink_separator(&g, &td, &w, &VertexSet::from_vec(vec![0]), 1);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }
}
