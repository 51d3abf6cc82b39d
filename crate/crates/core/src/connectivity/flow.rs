//! Set-to-set vertex-disjoint paths by unit-capacity max flow on the
//! vertex-split graph.

use crate::graph::Graph;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network. Vertex `v` becomes `2v` (in) and `2v + 1` (out).
struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { arcs: Vec::new(), out: vec![Vec::new(); nodes + 2], source: nodes, sink: nodes + 1 }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// One augmenting path by BFS; returns `false` when none is left.
    fn augment(&mut self) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[self.source] = true;
        let mut queue = std::collections::VecDeque::from([self.source]);
        while let Some(u) = queue.pop_front() {
            if u == self.sink {
                break;
            }
            for &e in &self.out[u] {
                let a = self.arcs[e];
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    via[a.to] = e;
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut v = self.sink;
        while v != self.source {
            let e = via[v];
            self.arcs[e].cap -= 1;
            self.arcs[e ^ 1].cap += 1;
            v = self.arcs[e ^ 1].to;
        }
        true
    }
}

/// Result of a set-to-set flow computation.
pub(crate) struct Flow {
    pub value: usize,
    /// Vertex-disjoint paths, each from a vertex of `A` to a vertex of `B`.
    pub paths: Vec<Vec<usize>>,
}

/// Maximum number of vertex-disjoint `A`-`B` paths in `G` minus `blocked`
/// (a vertex of `A ∩ B` is a one-vertex path), with the paths.
pub(crate) fn disjoint_paths(g: &Graph, a: &[usize], b: &[usize], blocked: &[bool]) -> Flow {
    let n = g.n();
    let mut net = Network::new(2 * n);
    let big = n as u32 + 1;
    for v in 0..n {
        if blocked[v] {
            continue;
        }
        net.add(2 * v, 2 * v + 1, 1);
        for &w in g.neighbors(v) {
            if !blocked[w] {
                net.add(2 * v + 1, 2 * w, big);
            }
        }
    }
    for &v in a {
        if !blocked[v] {
            net.add(net.source, 2 * v, 1);
        }
    }
    for &v in b {
        if !blocked[v] {
            net.add(2 * v + 1, net.sink, 1);
        }
    }
    let mut value = 0;
    while net.augment() {
        value += 1;
    }
    let paths = decompose(&net, n, value);
    Flow { value, paths }
}

/// Reads `value` vertex paths off the saturated split arcs.
fn decompose(net: &Network, n: usize, value: usize) -> Vec<Vec<usize>> {
    // Flow on an arc equals the capacity of its reverse arc for forward
    // arcs (even index).
    let mut used = vec![0u32; net.arcs.len()];
    let mut paths = Vec::with_capacity(value);
    for _ in 0..value {
        let mut path = Vec::new();
        let mut u = net.source;
        while u != net.sink {
            let e = *net.out[u]
                .iter()
                .find(|&&e| e % 2 == 0 && net.arcs[e ^ 1].cap > used[e])
                .expect("flow conservation");
            used[e] += 1;
            u = net.arcs[e].to;
            if u < 2 * n && u.is_multiple_of(2) {
                path.push(u / 2);
            }
        }
        paths.push(path);
    }
    paths.sort();
    paths
}

/// Lexicographically smallest minimum vertex set meeting every `A`-`B`
/// path, found by greedily forcing vertices into the cut.
pub(crate) fn lex_min_cut(g: &Graph, a: &[usize], b: &[usize], blocked: &[bool]) -> Vec<usize> {
    let mut blocked = blocked.to_vec();
    let mut k = disjoint_paths(g, a, b, &blocked).value;
    let mut cut = Vec::with_capacity(k);
    for v in 0..g.n() {
        if k == 0 {
            break;
        }
        if blocked[v] {
            continue;
        }
        blocked[v] = true;
        if disjoint_paths(g, a, b, &blocked).value == k - 1 {
            cut.push(v);
            k -= 1;
        } else {
            blocked[v] = false;
        }
    }
    cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn grid_corners() {
        let g = grid(3, 3);
        let f = disjoint_paths(&g, &[0], &[8], &[false; 9]);
        assert_eq!(f.value, 1);
        let f = disjoint_paths(&g, &[0, 1, 2], &[6, 7, 8], &[false; 9]);
        assert_eq!(f.value, 3);
        assert_eq!(f.paths.len(), 3);
        assert_eq!(lex_min_cut(&g, &[0, 1, 2], &[6, 7, 8], &[false; 9]), vec![0, 1, 2]);
    }

    #[test]
    fn overlapping_sets() {
        let g = path(3);
        assert_eq!(disjoint_paths(&g, &[0, 1], &[1, 2], &[false; 3]).value, 1);
        let f = disjoint_paths(&g, &[0, 2], &[0, 2], &[false; 3]);
        assert_eq!(f.value, 2);
        assert_eq!(f.paths, vec![vec![0], vec![2]]);
    }

    #[test]
    fn lex_cut() {
        let g = cycle(6);
        assert_eq!(lex_min_cut(&g, &[1, 5], &[2, 4], &[true, false, false, true, false, false]), vec![1, 4]);
    }
}
