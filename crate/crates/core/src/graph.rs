//! Simple undirected graphs on the dense vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Sorts and deduplicates.
    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask_iter(mask).collect())
    }

    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::from_vec(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::from_vec(v.to_vec())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterates the set bits of a mask in increasing order.
pub fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An induced path, listed end to end.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(Vec<usize>);

impl Path {
    /// Builds a path after checking that `vertices` induce a path in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if !g.is_induced_path(&vertices) {
            return Err(Error::Input(format!("{vertices:?} is not an induced path")));
        }
        Ok(Path(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.0[0], *self.0.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    #[serde(skip)]
    masks: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            masks: if n <= 64 { vec![0; n] } else { Vec::new() },
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range ids and
    /// repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(Error::Input(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(Self::from_adjacency(adj))
    }

    fn from_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let masks = if n <= 64 {
            adj.iter().map(|l| l.iter().fold(0u64, |m, &v| m | (1 << v))).collect()
        } else {
            Vec::new()
        };
        Graph { n, adj, masks, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Input(format!("{} labels for {} vertices", labels.len(), self.n)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Same edges with `extra` new isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.extend(std::iter::repeat_with(Vec::new).take(extra));
        Self::from_adjacency(adj)
    }

    /// Adds edges, returning a new graph.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges();
        for &(u, v) in extra {
            if u < self.n && v < self.n && !self.has_edge(u, v) {
                edges.push((u.min(v), u.max(v)));
            } else if u >= self.n || v >= self.n || u == v {
                return Err(Error::Input(format!("bad extra edge ({u},{v})")));
            }
        }
        Graph::from_edges(self.n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.n <= 64 {
            self.masks[u] >> v & 1 == 1
        } else {
            self.adj[u].binary_search(&v).is_ok()
        }
    }

    /// Neighbourhood bitmask. Only available when `n <= 64`.
    pub fn nbr_mask(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "bitmask access needs n <= 64");
        self.masks[v]
    }

    pub fn full_mask(&self) -> u64 {
        assert!(self.n <= 64, "bitmask access needs n <= 64");
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::Input(format!("vertex {v} out of range for n={}", self.n))),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::Input(format!("vertex {v} out of range for n={}", self.n)))
        } else {
            Ok(())
        }
    }

    /// `G[x]` together with the old-to-new id table (`None` for dropped ids).
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.check_set(x)?;
        let mut remap = vec![None; self.n];
        for (new, old) in x.iter().enumerate() {
            remap[old] = Some(new);
        }
        let adj = x
            .iter()
            .map(|old| self.adj[old].iter().filter_map(|&w| remap[w]).collect())
            .collect();
        let mut sub = Self::from_adjacency(adj);
        if let Some(labels) = &self.labels {
            sub.labels = Some(x.iter().map(|v| labels[v].clone()).collect());
        }
        Ok((sub, remap))
    }

    /// Open (`closed = false`) or closed neighbourhood of `x`.
    pub fn neighborhood(&self, x: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(x)?;
        let mut mark = vec![false; self.n];
        for v in x {
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        for v in x {
            mark[v] = closed;
        }
        Ok(VertexSet((0..self.n).filter(|&v| mark[v]).collect()))
    }

    /// Components of `G \ forbidden`, ordered by smallest member.
    pub fn components(&self, forbidden: &VertexSet) -> Vec<VertexSet> {
        let mut blocked = vec![false; self.n];
        for v in forbidden {
            if v < self.n {
                blocked[v] = true;
            }
        }
        self.components_avoiding(&blocked)
    }

    /// Components of the subgraph on the vertices with `blocked[v] == false`.
    pub fn components_avoiding(&self, blocked: &[bool]) -> Vec<VertexSet> {
        let mut seen = blocked.to_vec();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    /// Components of `G[within]` as bitmasks (requires `n <= 64`).
    pub fn components_mask(&self, within: u64) -> Vec<u64> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.masks[v] & within & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::new()).len() <= 1
    }

    /// A shortest `a`-`b` path whose interior vertices satisfy `allowed`.
    /// BFS visits neighbours in id order, so the result is deterministic.
    /// When `a` and `b` are nonadjacent the result is an induced path.
    pub fn shortest_path(&self, a: usize, b: usize, allowed: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
        if a == b {
            return Some(vec![a]);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if parent[w] != usize::MAX {
                    continue;
                }
                if w == b {
                    let mut path = vec![b, v];
                    let mut u = v;
                    while u != a {
                        u = parent[u];
                        path.push(u);
                    }
                    path.reverse();
                    return Some(path);
                }
                if allowed(w) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Whether `vertices` (in order) form an induced path of `g`.
    pub fn is_induced_path(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() || vertices.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return false;
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                if self.has_edge(vertices[i], vertices[j]) != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `cycle` (in cyclic order) is a hole: an induced cycle on at
    /// least four vertices.
    pub fn is_hole(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 4 || cycle.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut sorted = cycle.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if self.has_edge(cycle[i], cycle[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_clique(&self, x: &[usize]) -> bool {
        x.iter().enumerate().all(|(i, &u)| x[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_stable(&self, x: &[usize]) -> bool {
        x.iter().enumerate().all(|(i, &u)| x[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Degeneracy ordering by repeated removal of a minimum-degree vertex
    /// (smallest id on ties). Every vertex has at most `degeneracy`
    /// neighbours later in the order.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let v = (0..self.n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v)).unwrap();
            degeneracy = degeneracy.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &w in &self.adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                }
            }
        }
        (order, degeneracy)
    }

    /// Maximum clique by branch and bound over at most `budget` search nodes.
    pub fn clique_number(&self, budget: u64) -> CliqueResult {
        let mut search = CliqueSearch { g: self, best: Vec::new(), nodes: 0, budget, exhausted: false };
        let mut current = Vec::new();
        let candidates: Vec<usize> = (0..self.n).collect();
        search.expand(&mut current, candidates);
        CliqueResult { size: search.best.len(), witness: search.best, exact: !search.exhausted }
    }

    /// Some clique of exactly `size` vertices, lexicographically smallest.
    pub fn find_clique_of_size(&self, size: usize) -> Option<Vec<usize>> {
        fn rec(g: &Graph, size: usize, current: &mut Vec<usize>, cands: &[usize]) -> bool {
            if current.len() == size {
                return true;
            }
            for (i, &v) in cands.iter().enumerate() {
                if current.len() + cands.len() - i < size {
                    return false;
                }
                current.push(v);
                let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
                if rec(g, size, current, &next) {
                    return true;
                }
                current.pop();
            }
            false
        }
        let mut current = Vec::new();
        let cands: Vec<usize> = (0..self.n).collect();
        if rec(self, size, &mut current, &cands) {
            Some(current)
        } else {
            None
        }
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement edges are valid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
    /// `false` when the node budget ran out; `size` is then a lower bound.
    pub exact: bool,
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<usize>, candidates: Vec<usize>) {
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        for (i, &v) in candidates.iter().enumerate() {
            if current.len() + candidates.len() - i <= self.best.len() {
                return;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                self.exhausted = true;
                return;
            }
            current.push(v);
            let next = candidates[i + 1..].iter().copied().filter(|&w| self.g.has_edge(v, w)).collect();
            self.expand(current, next);
            current.pop();
            if self.exhausted {
                return;
            }
        }
    }
}

/// Small named graphs used throughout tests and the generator library.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// Star with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// Outer cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    /// Hole `0..h` plus centre `h` adjacent to `spokes`.
    pub fn wheel(h: usize, spokes: &[usize]) -> Graph {
        let mut edges: Vec<_> = (1..h).map(|i| (i - 1, i)).collect();
        edges.push((0, h - 1));
        edges.extend(spokes.iter().map(|&s| (s, h)));
        Graph::from_edges(h + 1, &edges).unwrap()
    }

    /// Triangles {0,1,2} and {3,4,5} joined by 0-3, 1-4, 2-5.
    pub fn triangular_prism() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, &edges).unwrap()
    }

    /// Two ends 0 and 1 joined by paths with the given numbers of interior
    /// vertices.
    pub fn theta(interiors: [usize; 3]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for len in interiors {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    /// Disjoint union.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        let mut edges = a.edges();
        edges.extend(b.edges().into_iter().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(a.n() + b.n(), &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn induced_subgraph_cases() {
        let c5 = cycle(5);
        let (g, remap) = c5.induced_subgraph(&VertexSet::range(5)).unwrap();
        assert_eq!(g, c5);
        assert!(remap.iter().all(Option::is_some));

        let (g, _) = complete(4).induced_subgraph(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);

        let (outer, _) = petersen().induced_subgraph(&VertexSet::from([0, 1, 2, 3, 4])).unwrap();
        assert_eq!(outer, cycle(5));

        assert!(complete(3).induced_subgraph(&VertexSet::from([0, 5])).is_err());
    }

    #[test]
    fn petersen_has_no_independent_five_set_on_outer_cycle() {
        let p = petersen();
        // Largest stable set is 4, so no 5-set is independent.
        for mask in 0u64..1 << 10 {
            if mask.count_ones() == 5 {
                let s: Vec<usize> = mask_iter(mask).collect();
                assert!(!p.is_stable(&s));
            }
        }
    }

    #[test]
    fn neighborhood_cases() {
        let s = star(4);
        assert_eq!(s.neighborhood(&VertexSet::from([0]), false).unwrap(), VertexSet::from([1, 2, 3, 4]));
        assert_eq!(cycle(6).neighborhood(&VertexSet::from([0]), true).unwrap(), VertexSet::from([0, 1, 5]));
        assert!(petersen().neighborhood(&VertexSet::new(), false).unwrap().is_empty());
        assert!(petersen().neighborhood(&VertexSet::new(), true).unwrap().is_empty());
        assert!(s.neighborhood(&VertexSet::from([9]), true).is_err());
    }

    #[test]
    fn components_cases() {
        let two = disjoint_union(&complete(3), &complete(3));
        let comps = two.components(&VertexSet::new());
        assert_eq!(comps, vec![VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 5])]);
        assert_eq!(
            cycle(6).components(&VertexSet::from([0, 3])),
            vec![VertexSet::from([1, 2]), VertexSet::from([4, 5])]
        );
        assert!(complete(5).components(&VertexSet::range(5)).is_empty());
        assert_eq!(cycle(6).components_mask(0b110110), vec![0b110, 0b110000]);
    }

    #[test]
    fn degeneracy_cases() {
        assert_eq!(path(6).degeneracy_order().1, 1);
        assert_eq!(star(5).degeneracy_order().1, 1);
        assert_eq!(cycle(5).degeneracy_order().1, 2);
        assert_eq!(complete(5).degeneracy_order().1, 4);
    }

    #[test]
    fn clique_cases() {
        assert_eq!(complete(4).clique_number(1_000).size, 4);
        assert_eq!(cycle(7).clique_number(1_000).size, 2);
        let p = petersen().clique_number(1_000_000);
        assert!(p.exact);
        assert_eq!(p.size, 2);
        // Tiny budget must flag the result rather than claim exactness.
        let partial = complete(12).clique_number(3);
        assert!(!partial.exact);
        assert!(partial.size <= 12);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn holes_and_paths() {
        let c6 = cycle(6);
        assert!(c6.is_hole(&[0, 1, 2, 3, 4, 5]));
        assert!(!c6.is_hole(&[0, 1, 2]));
        assert!(!complete(4).is_hole(&[0, 1, 2, 3]));
        assert!(c6.is_induced_path(&[0, 1, 2, 3]));
        assert!(!c6.is_induced_path(&[0, 1, 2, 3, 4, 5]));
    }
}
