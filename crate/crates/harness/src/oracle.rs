//! Brute-force reference answers by enumerating every vertex subset and
//! testing the induced subgraph against the definitions. Written without
//! the core detectors so the two can be compared. Intended for n <= 16.

use ehf_core::structures::{Kind, Target};
use ehf_core::Graph;

/// Bitmask adjacency, independent of the core bitmask helpers.
pub struct Masks {
    n: usize,
    adj: Vec<u32>,
}

impl Masks {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 32, "oracle needs n <= 32");
        let adj = (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
        Masks { n: g.n(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn deg(&self, v: usize, s: u32) -> u32 {
        (self.adj[v] & s).count_ones()
    }

    fn edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    fn components(&self, s: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut left = s;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = bits(comp).fold(comp, |c, v| c | (self.adj[v] & s));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    fn edges_between(&self, a: u32, b: u32) -> u32 {
        bits(a).map(|v| (self.adj[v] & b).count_ones()).sum()
    }

    /// `s` induces a hole.
    pub fn is_hole(&self, s: u32) -> bool {
        s.count_ones() >= 4 && bits(s).all(|v| self.deg(v, s) == 2) && self.components(s).len() == 1
    }

    pub fn is_theta(&self, s: u32) -> bool {
        let mut three = Vec::new();
        for v in bits(s) {
            match self.deg(v, s) {
                2 => {}
                3 => three.push(v),
                _ => return false,
            }
        }
        if three.len() != 2 || self.edge(three[0], three[1]) {
            return false;
        }
        let (a, b) = (1u32 << three[0], 1u32 << three[1]);
        let comps = self.components(s & !a & !b);
        comps.len() == 3 && comps.iter().all(|&c| self.edges_between(c, a) == 1 && self.edges_between(c, b) == 1)
    }

    fn triangles(&self, s: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for u in bits(s) {
            for v in bits(self.adj[u] & s).filter(|&v| v > u) {
                for w in bits(self.adj[u] & self.adj[v] & s).filter(|&w| w > v) {
                    out.push(1 << u | 1 << v | 1 << w);
                }
            }
        }
        out
    }

    /// Adjacency restricted to `s` with the edges inside each of `tris` removed.
    fn without_triangle_edges(&self, s: u32, tris: &[u32]) -> Masks {
        let mut adj = self.adj.clone();
        for (v, a) in adj.iter_mut().enumerate() {
            *a &= s;
            for &t in tris {
                if t >> v & 1 == 1 {
                    *a &= !t;
                }
            }
        }
        Masks { n: self.n, adj }
    }

    pub fn is_prism(&self, s: u32) -> bool {
        let mut three = 0u32;
        for v in bits(s) {
            match self.deg(v, s) {
                2 => {}
                3 => three |= 1 << v,
                _ => return false,
            }
        }
        let tris = self.triangles(s);
        if three.count_ones() != 6 || tris.len() != 2 || tris[0] & tris[1] != 0 || tris[0] | tris[1] != three {
            return false;
        }
        let h = self.without_triangle_edges(s, &tris);
        let comps = h.components(s);
        comps.len() == 3 && comps.iter().all(|&c| (c & tris[0]).count_ones() == 1 && (c & tris[1]).count_ones() == 1)
    }

    pub fn is_pyramid(&self, s: u32) -> bool {
        let mut three = 0u32;
        for v in bits(s) {
            match self.deg(v, s) {
                2 => {}
                3 => three |= 1 << v,
                _ => return false,
            }
        }
        let tris = self.triangles(s);
        if three.count_ones() != 4 || tris.len() != 1 || tris[0] & !three != 0 {
            return false;
        }
        let apex = three & !tris[0];
        let a = apex.trailing_zeros() as usize;
        if (self.adj[a] & tris[0]).count_ones() > 1 {
            return false;
        }
        let h = self.without_triangle_edges(s, &tris);
        let comps = h.components(s & !apex);
        comps.len() == 3 && comps.iter().all(|&c| (c & tris[0]).count_ones() == 1 && h.edges_between(c, apex) == 1)
    }

    /// Wheel types for `s` with centre `x`, if `(s - x, x)` is a wheel.
    pub fn wheel_at(&self, s: u32, x: usize) -> Option<WheelType> {
        if s >> x & 1 == 0 {
            return None;
        }
        let h = s & !(1 << x);
        if !self.is_hole(h) {
            return None;
        }
        let spokes = self.adj[x] & h;
        let count = spokes.count_ones();
        if count < 3 {
            return None;
        }
        let inner: u32 = bits(spokes).map(|v| (self.adj[v] & spokes).count_ones()).sum::<u32>() / 2;
        let twin = count == 3 && inner == 2;
        let short_pyramid = count == 3 && inner == 1;
        Some(WheelType { even: count.is_multiple_of(2), proper: !twin && !short_pyramid })
    }

    pub fn matches(&self, s: u32, target: Target) -> bool {
        match target {
            Target::Kind(Kind::C4) => s.count_ones() == 4 && self.is_hole(s),
            Target::Kind(Kind::EvenHole) => s.count_ones().is_multiple_of(2) && self.is_hole(s),
            Target::Kind(Kind::Theta) => self.is_theta(s),
            Target::Kind(Kind::Prism) => self.is_prism(s),
            Target::Kind(Kind::Pyramid) => self.is_pyramid(s),
            Target::Kind(Kind::Wheel) => bits(s).any(|x| self.wheel_at(s, x).is_some()),
            Target::EvenWheel => bits(s).any(|x| self.wheel_at(s, x).is_some_and(|w| w.even)),
        }
    }

    /// The lexicographically smallest sorted vertex list inducing `target`.
    pub fn lex_min(&self, target: Target) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for s in subsets(full(self.n)).skip(1) {
            if self.matches(s, target) {
                let v: Vec<usize> = bits(s).collect();
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        best
    }

    /// Centres of proper wheels.
    pub fn hubs(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| {
                let others = full(self.n) & !(1 << x);
                subsets(others).any(|h| self.wheel_at(h | 1 << x, x).is_some_and(|w| w.proper))
            })
            .collect()
    }

    pub fn clique_number(&self) -> usize {
        subsets(full(self.n))
            .filter(|&s| bits(s).all(|v| (self.adj[v] & s).count_ones() + 1 == s.count_ones()))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct WheelType {
    pub even: bool,
    pub proper: bool,
}

/// Reference class verdict: `Ok(())` when in the class (and below the
/// clique bound `t`), else the first violated target with its lex-min
/// witness, or `None` for a clique violation.
pub fn class_verdict(m: &Masks, t: Option<usize>) -> Result<(), Option<(Target, Vec<usize>)>> {
    for target in [Target::Kind(Kind::C4), Target::Kind(Kind::Theta), Target::Kind(Kind::Prism), Target::EvenWheel] {
        if let Some(w) = m.lex_min(target) {
            return Err(Some((target, w)));
        }
    }
    match t {
        Some(t) if m.clique_number() >= t => Err(None),
        _ => Ok(()),
    }
}

pub fn bits(mut s: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            v
        })
    })
}

fn full(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// All subsets of `s`, the empty set included.
fn subsets(s: u32) -> impl Iterator<Item = u32> {
    let mut cur = Some(0u32);
    std::iter::from_fn(move || {
        let out = cur?;
        let next = (out.wrapping_sub(s)) & s;
        cur = (next != 0).then_some(next);
        Some(out)
    })
}

/// All graphs on `n` vertices up to isomorphism, one representative each,
/// grown vertex by vertex and deduplicated by a canonical form.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "isomorphism classes only enumerated up to 9 vertices");
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    for k in 1..=n {
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for nb in 0..(1u32 << (k - 1)) {
                let mut a = adj.clone();
                for (v, av) in a.iter_mut().enumerate() {
                    if nb >> v & 1 == 1 {
                        *av |= 1 << (k - 1);
                    }
                }
                a.push(nb);
                let key = canonical_form(&a);
                if seen.insert(key) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| bits(adj[u]).filter(move |&v| v > u).map(move |v| (u, v))).collect();
            Graph::from_edges(n, &edges).expect("valid edges")
        })
        .collect()
}

/// Largest upper-triangle bit string over orderings that respect the
/// colour-refinement cells. Equal for isomorphic graphs.
fn canonical_form(adj: &[u32]) -> (Vec<u32>, u64) {
    let n = adj.len();
    let mut colour: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = bits(adj[v]).map(|u| colour[u]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs.iter().map(|s| sorted.binary_search(s).unwrap() as u32).collect();
        let classes = |c: &[u32]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            colour = next;
            break;
        }
        colour = next;
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<u32> = colour.clone();
    order.sort_unstable();
    order.dedup();
    for c in &order {
        cells.push((0..n).filter(|&v| colour[v] == *c).collect());
    }
    let mut best = 0u64;
    let mut perm = Vec::with_capacity(n);
    permute_cells(adj, &mut cells, 0, &mut perm, &mut best);
    let mut sizes: Vec<u32> = cells.iter().map(|c| c.len() as u32).collect();
    sizes.extend(order);
    (sizes, best)
}

fn permute_cells(adj: &[u32], cells: &mut [Vec<usize>], i: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if i == cells.len() {
        let n = perm.len();
        let mut code = 0u64;
        for a in 0..n {
            for b in a + 1..n {
                code = code << 1 | u64::from(adj[perm[a]] >> perm[b] & 1);
            }
        }
        *best = (*best).max(code);
        return;
    }
    let cell = cells[i].clone();
    heap_permutations(&cell, &mut |p: &[usize]| {
        let base = perm.len();
        perm.extend_from_slice(p);
        permute_cells(adj, cells, i + 1, perm, best);
        perm.truncate(base);
    });
}

fn heap_permutations(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    let mut a = items.to_vec();
    let k = a.len();
    let mut c = vec![0; k];
    f(&a);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehf_core::graph::named::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn recognisers() {
        let m = Masks::new(&theta([1, 2, 3]));
        assert!(m.is_theta(full(m.n())));
        let m = Masks::new(&triangular_prism());
        assert!(m.is_prism(full(6)) && !m.is_theta(full(6)));
        let m = Masks::new(&wheel(6, &[0, 2, 4]));
        assert_eq!(m.hubs(), vec![6]);
        assert!(m.lex_min(Target::EvenWheel).is_none());
        let m = Masks::new(&wheel(6, &[0, 1, 3, 4]));
        assert!(m.lex_min(Target::EvenWheel).is_some());
        let m = Masks::new(&cycle(6));
        assert_eq!(m.lex_min(Target::Kind(Kind::EvenHole)), Some((0..6).collect()));
        assert_eq!(m.clique_number(), 2);
    }
}
