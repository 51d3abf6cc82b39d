//! Vertex connectivity: Menger separators and bananas, balanced separators,
//! star and clique cutsets, Gyárfás paths, and the cutsets forced by proper
//! wheels and pyramids.

mod domsep;
pub(crate) mod flow;
mod forcer;

use num_traits::Zero;
use serde::Serialize;

pub use domsep::{dominated_balanced_separator, DomsepStrategy};
pub use forcer::{pyramid_neighborhood_check, wheel_forcer_cutset, wheel_star_cutset_holds, ForcerResult};

use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexSet};
use crate::weights::{half, Rational, WeightFunction};

/// `k` internally disjoint induced `a`-`b` paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Banana {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub paths: Vec<Vec<usize>>,
}

impl Banana {
    /// Checks the definition directly: induced `a`-`b` paths with pairwise
    /// disjoint interiors, `a` and `b` nonadjacent.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.a == self.b || g.has_edge(self.a, self.b) || self.paths.len() != self.k {
            return Err(Error::Input("banana ends equal or adjacent, or wrong count".into()));
        }
        let mut seen = vec![false; g.n()];
        for p in &self.paths {
            if p.first() != Some(&self.a) || p.last() != Some(&self.b) || !g.is_induced_path(p) {
                return Err(Error::Input(format!("{p:?} is not an induced a-b path")));
            }
            for &v in &p[1..p.len() - 1] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Input(format!("interiors share vertex {v}")));
                }
            }
        }
        Ok(())
    }
}

fn check_pair(g: &Graph, a: usize, b: usize) -> Result<()> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::Input(format!("ends coincide ({a})")));
    }
    if g.has_edge(a, b) {
        return Err(Error::Input(format!("{a} and {b} are adjacent; no separator exists")));
    }
    Ok(())
}

fn ends_blocked(g: &Graph, a: usize, b: usize) -> Vec<bool> {
    let mut blocked = vec![false; g.n()];
    blocked[a] = true;
    blocked[b] = true;
    blocked
}

/// Lexicographically smallest minimum set `M ⊆ V \ {a, b}` meeting the
/// interior of every `a`-`b` path.
pub fn min_separator(g: &Graph, a: usize, b: usize) -> Result<VertexSet> {
    check_pair(g, a, b)?;
    let cut = flow::lex_min_cut(g, g.neighbors(a), g.neighbors(b), &ends_blocked(g, a, b));
    Ok(VertexSet::from_vec(cut))
}

/// Maximum number of internally disjoint `a`-`b` paths, each made induced by
/// shortcutting chords.
pub fn max_banana(g: &Graph, a: usize, b: usize) -> Result<Banana> {
    check_pair(g, a, b)?;
    let f = flow::disjoint_paths(g, g.neighbors(a), g.neighbors(b), &ends_blocked(g, a, b));
    let mut paths: Vec<Vec<usize>> = f
        .paths
        .into_iter()
        .map(|mid| {
            let mut p = Vec::with_capacity(mid.len() + 2);
            p.push(a);
            p.extend(mid);
            p.push(b);
            shortcut(g, &p)
        })
        .collect();
    paths.sort();
    let banana = Banana { a, b, k: paths.len(), paths };
    debug_assert!(banana.validate(g).is_ok());
    Ok(banana)
}

/// Turns a walk into an induced path with the same ends by repeatedly
/// jumping to the furthest later vertex adjacent to the current one.
pub fn shortcut(g: &Graph, walk: &[usize]) -> Vec<usize> {
    let mut out = vec![walk[0]];
    let mut i = 0;
    while i + 1 < walk.len() {
        let j = (i + 1..walk.len()).rev().find(|&j| g.has_edge(walk[i], walk[j])).unwrap_or(i + 1);
        out.push(walk[j]);
        i = j;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalanceVerdict {
    pub balanced: bool,
    #[serde(serialize_with = "crate::weights::serialize_rational")]
    pub heaviest: Rational,
    /// Smallest vertex of a heaviest component, if any component exists.
    pub heaviest_component: Option<VertexSet>,
}

/// Whether every component of `G \ x` has weight at most `c`, exactly.
pub fn is_balanced_separator(g: &Graph, w: &WeightFunction, x: &VertexSet, c: &Rational) -> Result<BalanceVerdict> {
    w.check_normal_for(g)?;
    g.check_set(x)?;
    if *c < Rational::zero() || *c > Rational::from_integer(1) {
        return Err(Error::Input(format!("balance constant {c} outside [0, 1]")));
    }
    Ok(balance_unchecked(g, w, x, c))
}

pub(crate) fn balance_unchecked(g: &Graph, w: &WeightFunction, x: &VertexSet, c: &Rational) -> BalanceVerdict {
    let mut best: Option<(i128, VertexSet)> = None;
    for comp in g.components(x) {
        let raw = w.raw_sum(comp.iter());
        if best.as_ref().is_none_or(|(b, _)| raw > *b) {
            best = Some((raw, comp));
        }
    }
    let raw = best.as_ref().map_or(0, |(r, _)| *r);
    BalanceVerdict {
        balanced: w.raw_at_most(raw, c),
        heaviest: Rational::new(raw, w.denominator()),
        heaviest_component: best.map(|(_, comp)| comp),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarCutset {
    pub center: usize,
    /// An inclusion-minimal cutset `S` with `center ∈ S ⊆ N[center]`.
    pub cutset: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutsetReport {
    pub star: Vec<StarCutset>,
    pub clique: Vec<VertexSet>,
    pub clique_size_cap: usize,
}

fn disconnects(g: &Graph, s: &VertexSet) -> bool {
    g.components(s).len() >= 2
}

/// A star cutset centred at `x`, shrunk to be inclusion-minimal among sets
/// that still contain `x`.
pub fn star_cutset_at(g: &Graph, x: usize) -> Option<VertexSet> {
    let closed = g.neighborhood(&VertexSet::singleton(x), true).ok()?;
    let n = g.n();
    // G \ S is disconnected iff two surviving vertices y, z are separated,
    // and S may then grow to N[x] \ {y, z}.
    let mut found = None;
    'outer: for y in 0..n {
        if y == x {
            continue;
        }
        for z in y + 1..n {
            if z == x {
                continue;
            }
            let mut s = closed.clone();
            s.remove(y);
            s.remove(z);
            let comps = g.components(&s);
            let cy = comps.iter().position(|c| c.contains(y));
            if cy.is_some() && cy != comps.iter().position(|c| c.contains(z)) {
                found = Some(s);
                break 'outer;
            }
        }
    }
    let mut s = found?;
    // Disconnection is not monotone in S, so sweep until nothing moves.
    let mut changed = true;
    while changed {
        changed = false;
        for v in s.clone().iter() {
            if v == x {
                continue;
            }
            let mut t = s.clone();
            t.remove(v);
            if disconnects(g, &t) {
                s = t;
                changed = true;
            }
        }
    }
    Some(s)
}

/// Star cutsets for every vertex that has one, and all clique cutsets with
/// at most `clique_cap` vertices.
pub fn star_and_clique_cutsets(g: &Graph, clique_cap: usize) -> CutsetReport {
    let star = (0..g.n()).filter_map(|x| star_cutset_at(g, x).map(|cutset| StarCutset { center: x, cutset })).collect();
    let mut clique = Vec::new();
    let mut current = Vec::new();
    cliques_rec(g, clique_cap, &mut current, &(0..g.n()).collect::<Vec<_>>(), &mut clique);
    CutsetReport { star, clique, clique_size_cap: clique_cap }
}

fn cliques_rec(g: &Graph, cap: usize, current: &mut Vec<usize>, cands: &[usize], out: &mut Vec<VertexSet>) {
    for (i, &v) in cands.iter().enumerate() {
        current.push(v);
        let set = VertexSet::from_vec(current.clone());
        if disconnects(g, &set) {
            out.push(set);
        }
        if current.len() < cap {
            let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cliques_rec(g, cap, current, &next, out);
        }
        current.pop();
    }
}

/// An induced path `P` such that `N[P]` is a `w`-balanced separator.
///
/// Starts at vertex 0. While `G \ N[P]` has a component `C` of weight above
/// one half, the head steps to a neighbour that lies in the previous heavy
/// component and touches `C`; such a step keeps `P` induced and strictly
/// shrinks the heavy component.
pub fn gyarfas_path(g: &Graph, w: &WeightFunction) -> Result<Path> {
    w.check_normal_for(g)?;
    if g.n() == 0 {
        return Err(Error::Input("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Input("graph is disconnected".into()));
    }
    let one_half = half();
    let mut p = vec![0usize];
    let mut in_prev: Vec<bool> = (0..g.n()).map(|v| v != 0).collect();
    loop {
        let closed = g.neighborhood(&VertexSet::from_vec(p.clone()), true)?;
        let heavy = g.components(&closed).into_iter().find(|c| !w.raw_at_most(w.raw_sum(c.iter()), &one_half));
        let Some(heavy) = heavy else {
            return Path::new(g, p);
        };
        let head = *p.last().unwrap();
        let next = g
            .neighbors(head)
            .iter()
            .copied()
            .find(|&v| in_prev[v] && g.neighbors(v).iter().any(|&u| heavy.contains(u)))
            .expect("connected graph always offers a step");
        p.push(next);
        in_prev = vec![false; g.n()];
        for v in &heavy {
            in_prev[v] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn separator_examples() {
        let g = complete_bipartite(2, 3);
        assert_eq!(min_separator(&g, 0, 1).unwrap().as_slice(), &[2, 3, 4]);
        assert_eq!(min_separator(&path(4), 0, 3).unwrap().len(), 1);
        assert_eq!(min_separator(&petersen(), 0, 2).unwrap().len(), 3);
        assert!(min_separator(&path(2), 0, 1).is_err());
    }

    #[test]
    fn banana_examples() {
        let b = max_banana(&complete_bipartite(2, 3), 0, 1).unwrap();
        assert_eq!(b.k, 3);
        b.validate(&complete_bipartite(2, 3)).unwrap();
        assert_eq!(max_banana(&cycle(6), 0, 3).unwrap().k, 2);
        let t = theta([2, 2, 2]);
        assert_eq!(max_banana(&t, 0, 1).unwrap().k, 3);
    }

    #[test]
    fn shortcut_removes_chords() {
        // 0-1-2-3 with chord 0-2.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        assert_eq!(shortcut(&g, &[0, 1, 2, 3]), vec![0, 2, 3]);
    }

    #[test]
    fn balance_examples() {
        let g = cycle(4);
        let w = WeightFunction::uniform(4).unwrap();
        assert!(is_balanced_separator(&g, &w, &VertexSet::range(4), &half()).unwrap().balanced);
        let v = is_balanced_separator(&g, &w, &VertexSet::singleton(0), &half()).unwrap();
        assert!(!v.balanced);
        assert_eq!(v.heaviest, Rational::new(3, 4));
        let v = is_balanced_separator(&g, &w, &[0, 2].into(), &half()).unwrap();
        assert!(v.balanced && v.heaviest == Rational::new(1, 4));
        let bad = WeightFunction::from_ratios(&[Rational::new(1, 4); 3]).unwrap();
        assert!(is_balanced_separator(&cycle(3), &bad, &VertexSet::new(), &half()).is_err());
    }

    #[test]
    fn cutset_examples() {
        let r = star_and_clique_cutsets(&path(3), 3);
        assert_eq!(r.star, vec![StarCutset { center: 1, cutset: [1].into() }]);
        assert_eq!(r.clique, vec![VertexSet::from([1])]);
        assert!(star_and_clique_cutsets(&cycle(5), 3).star.is_empty());
        // Two triangles sharing edge 1-2.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(star_and_clique_cutsets(&g, 3).clique.contains(&VertexSet::from([1, 2])));
    }

    #[test]
    fn gyarfas_examples() {
        for g in [star(9), path(7), complete(6), petersen(), grid(4, 4)] {
            let w = WeightFunction::uniform(g.n()).unwrap();
            let p = gyarfas_path(&g, &w).unwrap();
            let closed = g.neighborhood(&VertexSet::from_vec(p.vertices().to_vec()), true).unwrap();
            assert!(is_balanced_separator(&g, &w, &closed, &half()).unwrap().balanced);
        }
        let g = path(9);
        let w = WeightFunction::point(9, 8).unwrap();
        let p = gyarfas_path(&g, &w).unwrap();
        assert!(p.vertices().contains(&7) || p.vertices().contains(&8));
    }
}
