//! Tree decompositions: validation, torsos, tightness, leanness, centres,
//! basket pairs, atomic decompositions and treewidth.

mod atomic;
mod balanced;
mod exact;
mod shrink;

use std::collections::HashMap;

use serde::Serialize;

use crate::connectivity::flow::disjoint_paths;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::next_combination;
use crate::weights::{half, WeightFunction};

pub use atomic::{atomic_td, AtomicMode, AtomicTd, ATOMIC_MAX_N};
pub use balanced::{td_from_balanced_separators, BalancedTd, OracleCall};
pub use exact::{min_fill_order, td_from_elimination, treewidth_exact, TwResult, EXACT_TW_MAX_N};
pub use shrink::{friendly_set, shrink_separator, Shrink};

/// Largest host for which `is_k_lean` runs without `force`.
pub const LEAN_MAX_N: usize = 12;
/// Largest `k` for which `is_k_lean` runs without `force`.
pub const LEAN_MAX_K: usize = 4;

/// A tree `T` with a bag `χ(t)` at every node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeDecomposition {
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    VertexOutOfRange { node: usize, vertex: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    /// The nodes whose bags hold `vertex` do not induce a subtree.
    Disconnected { vertex: usize, nodes: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdReport {
    pub valid: bool,
    pub width: usize,
    pub violations: Vec<Violation>,
}

/// Witness for one orientation `t -> t'` of a tree edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightEdge {
    pub t: usize,
    pub t2: usize,
    /// A component `D` of `G_{t->t'} \ χ(t)` with `N(D) = adh(t, t')`.
    pub component: Option<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightReport {
    pub tight: bool,
    pub edges: Vec<TightEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LeanViolation {
    Adhesion { t: usize, t2: usize, size: usize },
    Linkage { t: usize, t2: usize, z: VertexSet, z2: VertexSet, paths: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeanReport {
    pub lean: bool,
    pub violation: Option<LeanViolation>,
}

impl TreeDecomposition {
    /// Checks that `edges` form a tree on `bags.len()` nodes.
    pub fn new(bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let k = bags.len();
        if k == 0 {
            return Err(Error::Input("a tree decomposition needs at least one node".into()));
        }
        if edges.len() != k - 1 {
            return Err(Error::Input(format!("{} nodes need {} tree edges, got {}", k, k - 1, edges.len())));
        }
        let mut adj = vec![Vec::new(); k];
        for &(u, v) in &edges {
            if u >= k || v >= k || u == v {
                return Err(Error::Input(format!("bad tree edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        let td = TreeDecomposition { bags, edges, adj };
        if td.reach(0, usize::MAX).len() != k {
            return Err(Error::Input("tree edges do not connect all nodes".into()));
        }
        Ok(td)
    }

    pub fn single_bag(bag: VertexSet) -> Self {
        TreeDecomposition { bags: vec![bag], edges: Vec::new(), adj: vec![Vec::new()] }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bag(&self, t: usize) -> &VertexSet {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[VertexSet] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn tree_neighbors(&self, t: usize) -> &[usize] {
        &self.adj[t]
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Largest bag size minus one (zero for an all-empty decomposition).
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    /// `χ(u) ∩ χ(v)` for a tree edge, empty otherwise.
    pub fn adhesion(&self, u: usize, v: usize) -> VertexSet {
        if u != v && self.adj[u].contains(&v) {
            self.bags[u].intersection(&self.bags[v])
        } else {
            VertexSet::new()
        }
    }

    pub fn max_adhesion(&self) -> usize {
        self.edges.iter().map(|&(u, v)| self.adhesion(u, v).len()).max().unwrap_or(0)
    }

    /// Bag-size counts `(a_n, ..., a_0)`.
    pub fn fatness(&self, n: usize) -> Vec<usize> {
        let mut a = vec![0; n + 1];
        for b in &self.bags {
            a[b.len().min(n)] += 1;
        }
        a.reverse();
        a
    }

    /// Nodes reachable from `start` without entering `avoid`.
    fn reach(&self, start: usize, avoid: usize) -> Vec<usize> {
        let mut seen = vec![false; self.bags.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(u) = stack.pop() {
            out.push(u);
            for &v in &self.adj[u] {
                if v != avoid && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Nodes of `T_{t->t'}`.
    pub fn branch_nodes(&self, t: usize, t2: usize) -> Vec<usize> {
        self.reach(t2, t)
    }

    /// Vertex set of `G_{t->t'}`.
    pub fn branch_vertices(&self, t: usize, t2: usize) -> VertexSet {
        let mut out = VertexSet::new();
        for s in self.branch_nodes(t, t2) {
            out = out.union(&self.bags[s]);
        }
        out
    }

    /// Nodes on the tree path from `s` to `t`, in order.
    pub fn tree_path(&self, s: usize, t: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.bags.len()];
        parent[s] = s;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        let mut path = vec![t];
        let mut u = t;
        while u != s {
            u = parent[u];
            path.push(u);
        }
        path.reverse();
        path
    }

    pub fn check_node(&self, t: usize) -> Result<()> {
        if t >= self.bags.len() {
            return Err(Error::Input(format!("tree node {t} out of range ({} nodes)", self.bags.len())));
        }
        Ok(())
    }

    /// Vertex coverage, edge coverage and subtree connectivity.
    pub fn validate(&self, g: &Graph) -> TdReport {
        let n = g.n();
        let mut violations = Vec::new();
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for v in bag {
                if v >= n {
                    violations.push(Violation::VertexOutOfRange { node: t, vertex: v });
                } else {
                    holders[v].push(t);
                }
            }
        }
        for (v, h) in holders.iter().enumerate() {
            if h.is_empty() {
                violations.push(Violation::VertexUncovered { vertex: v });
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                violations.push(Violation::EdgeUncovered { u, v });
            }
        }
        for (v, h) in holders.iter().enumerate() {
            if h.len() > 1 && !self.induces_subtree(h) {
                violations.push(Violation::Disconnected { vertex: v, nodes: h.clone() });
            }
        }
        TdReport { valid: violations.is_empty(), width: self.width(), violations }
    }

    fn induces_subtree(&self, nodes: &[usize]) -> bool {
        let inside = |t: usize| nodes.binary_search(&t).is_ok();
        let mut seen = vec![false; self.bags.len()];
        seen[nodes[0]] = true;
        let mut stack = vec![nodes[0]];
        let mut count = 0;
        while let Some(u) = stack.pop() {
            count += 1;
            for &v in &self.adj[u] {
                if inside(v) && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        count == nodes.len()
    }

    fn require_valid(&self, g: &Graph) -> Result<()> {
        let r = self.validate(g);
        match r.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::Input(format!("invalid tree decomposition: {v:?}"))),
        }
    }

    /// `G[χ(t)]` with every adhesion at `t` completed to a clique. Vertex `i`
    /// of the result is the `i`-th smallest member of the bag.
    pub fn torso(&self, g: &Graph, t: usize) -> Result<Graph> {
        self.check_node(t)?;
        g.check_set(&self.bags[t])?;
        let bag = self.bags[t].as_slice();
        let idx = |v: usize| bag.binary_search(&v).unwrap();
        let mut edges = Vec::new();
        for (i, &u) in bag.iter().enumerate() {
            for &v in &bag[i + 1..] {
                if g.has_edge(u, v) {
                    edges.push((idx(u), idx(v)));
                }
            }
        }
        for &s in &self.adj[t] {
            let a = self.adhesion(t, s);
            for (i, u) in a.iter().enumerate() {
                for v in a.iter().skip(i + 1) {
                    edges.push((idx(u), idx(v)));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::from_edges(bag.len(), &edges)
    }

    /// Every orientation `t -> t'` of every tree edge has a component `D`
    /// of `G_{t->t'} \ χ(t)` whose neighbourhood contains `adh(t, t')`.
    pub fn tightness(&self, g: &Graph) -> Result<TightReport> {
        self.require_valid(g)?;
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            for (t, t2) in [(u, v), (v, u)] {
                edges.push(TightEdge { t, t2, component: self.tight_witness(g, t, t2) });
            }
        }
        Ok(TightReport { tight: edges.iter().all(|e| e.component.is_some()), edges })
    }

    pub fn is_tight(&self, g: &Graph) -> Result<bool> {
        Ok(self.tightness(g)?.tight)
    }

    fn tight_witness(&self, g: &Graph, t: usize, t2: usize) -> Option<VertexSet> {
        let side = self.branch_vertices(t, t2);
        let adh = self.adhesion(t, t2);
        let mut blocked = vec![true; g.n()];
        for v in &side.difference(&self.bags[t]) {
            blocked[v] = false;
        }
        g.components_avoiding(&blocked).into_iter().find(|d| {
            let nd = g.neighborhood(d, false).expect("valid set");
            adh.is_subset(&nd)
        })
    }

    /// The `k`-lean test. Refuses hosts beyond `LEAN_MAX_N` or `k` beyond
    /// `LEAN_MAX_K` unless `force` is set: the cost grows like
    /// `|T|^2 * C(bag, k)^2` flow computations.
    pub fn is_k_lean(&self, g: &Graph, k: usize, force: bool) -> Result<LeanReport> {
        self.require_valid(g)?;
        if !force && (g.n() > LEAN_MAX_N || k > LEAN_MAX_K) {
            return Err(Error::Guardrail(format!(
                "lean check limited to n <= {LEAN_MAX_N}, k <= {LEAN_MAX_K} (got n = {}, k = {k})",
                g.n()
            )));
        }
        for &(u, v) in &self.edges {
            let size = self.adhesion(u, v).len();
            if size >= k {
                return Ok(LeanReport { lean: false, violation: Some(LeanViolation::Adhesion { t: u, t2: v, size }) });
            }
        }
        let mut cache: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
        let free = vec![false; g.n()];
        for t in 0..self.len() {
            for t2 in t..self.len() {
                let path = self.tree_path(t, t2);
                let min_adh = path.windows(2).map(|e| self.adhesion(e[0], e[1]).len()).min().unwrap_or(usize::MAX);
                let (b1, b2) = (self.bags[t].as_slice(), self.bags[t2].as_slice());
                let top = k.min(b1.len()).min(b2.len()).min(min_adh);
                for s in 1..=top {
                    let mut zi: Vec<usize> = (0..s).collect();
                    loop {
                        let z: Vec<usize> = zi.iter().map(|&i| b1[i]).collect();
                        let mut zj: Vec<usize> = (0..s).collect();
                        loop {
                            let z2: Vec<usize> = zj.iter().map(|&i| b2[i]).collect();
                            let key = if z <= z2 { (z.clone(), z2.clone()) } else { (z2.clone(), z.clone()) };
                            let paths = *cache.entry(key).or_insert_with(|| disjoint_paths(g, &z, &z2, &free).value);
                            if paths < s {
                                let violation = LeanViolation::Linkage {
                                    t,
                                    t2,
                                    z: VertexSet::from_vec(z),
                                    z2: VertexSet::from_vec(z2),
                                    paths,
                                };
                                return Ok(LeanReport { lean: false, violation: Some(violation) });
                            }
                            if !next_combination(&mut zj, b2.len()) {
                                break;
                            }
                        }
                        if !next_combination(&mut zi, b1.len()) {
                            break;
                        }
                    }
                }
            }
        }
        Ok(LeanReport { lean: true, violation: None })
    }

    /// Whether `t` is a centre: `w(G_{t->t'} \ χ(t)) <= 1/2` for every
    /// tree neighbour `t'`.
    pub fn is_center(&self, w: &WeightFunction, t: usize) -> bool {
        let limit = half();
        self.adj[t].iter().all(|&s| {
            let side = self.branch_vertices(t, s).difference(&self.bags[t]);
            w.raw_at_most(w.raw_sum(side.iter()), &limit)
        })
    }

    /// The smallest-id centre.
    pub fn center(&self, g: &Graph, w: &WeightFunction) -> Result<usize> {
        self.require_valid(g)?;
        w.check_normal_for(g)?;
        Ok((0..self.len()).find(|&t| self.is_center(w, t)).expect("every tree decomposition has a centre"))
    }

    /// Nodes `t1 <= t2` whose bags meet the interior of every `a`-`b` path
    /// and leave no component of `G \ (χ(t1) ∪ χ(t2))` attached to both
    /// `a` and `b`. The first verified pair in lexicographic order.
    pub fn basket_pair(&self, g: &Graph, a: usize, b: usize) -> Result<(usize, usize)> {
        self.require_valid(g)?;
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if a == b || g.has_edge(a, b) {
            return Err(Error::Precondition(format!("{a} and {b} must be distinct and nonadjacent")));
        }
        for t1 in 0..self.len() {
            for t2 in t1..self.len() {
                if basket_holds(g, &self.bags[t1].union(&self.bags[t2]), a, b) {
                    return Ok((t1, t2));
                }
            }
        }
        Err(Error::Precondition(format!(
            "no pair of bags catches every {a}-{b} path; the graph contains a theta or the decomposition is not tight"
        )))
    }

    /// Repeatedly contracts tree edges whose one bag contains the other.
    pub fn compress(self) -> TreeDecomposition {
        let mut bags: Vec<Option<VertexSet>> = self.bags.into_iter().map(Some).collect();
        let mut edges = self.edges;
        loop {
            let hit = edges.iter().position(|&(u, v)| {
                let (bu, bv) = (bags[u].as_ref().unwrap(), bags[v].as_ref().unwrap());
                bu.is_subset(bv) || bv.is_subset(bu)
            });
            let Some(i) = hit else { break };
            let (u, v) = edges.swap_remove(i);
            let (keep, drop) = if bags[u].as_ref().unwrap().len() >= bags[v].as_ref().unwrap().len() { (u, v) } else { (v, u) };
            bags[drop] = None;
            for e in &mut edges {
                if e.0 == drop {
                    e.0 = keep;
                }
                if e.1 == drop {
                    e.1 = keep;
                }
            }
        }
        let mut remap = vec![usize::MAX; bags.len()];
        let mut out = Vec::new();
        for (i, b) in bags.into_iter().enumerate() {
            if let Some(b) = b {
                remap[i] = out.len();
                out.push(b);
            }
        }
        let mut edges: Vec<(usize, usize)> =
            edges.into_iter().map(|(u, v)| (remap[u].min(remap[v]), remap[u].max(remap[v]))).collect();
        edges.sort_unstable();
        TreeDecomposition::new(out, edges).expect("contraction keeps a tree")
    }
}

/// Both basket conditions for the bag union `u`.
pub(crate) fn basket_holds(g: &Graph, u: &VertexSet, a: usize, b: usize) -> bool {
    if g.shortest_path(a, b, |v| !u.contains(v)).is_some() {
        return false;
    }
    g.components(u).iter().all(|d| {
        let touches = |x: usize| g.neighbors(x).iter().any(|&y| d.contains(y));
        !(touches(a) && touches(b))
    })
}
