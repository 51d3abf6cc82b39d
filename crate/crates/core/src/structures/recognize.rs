//! Decides whether a vertex set (as a bitmask) induces a given structure,
//! and builds the certificate. Requires `n <= 64`.

use super::certificate::{Certificate, Kind, Target, WheelFlags};
use super::holes::canonical_cycle;
use crate::graph::{mask_iter, Graph};

pub(crate) fn deg_in(g: &Graph, v: usize, s: u64) -> u32 {
    (g.nbr_mask(v) & s).count_ones()
}

pub(crate) fn recognize(g: &Graph, s: u64, target: Target) -> Option<Certificate> {
    match target {
        Target::Kind(Kind::C4) => hole(g, s).filter(|c| c.len() == 4).map(|cycle| Certificate::C4 { cycle }),
        Target::Kind(Kind::EvenHole) => {
            hole(g, s).filter(|c| c.len() % 2 == 0).map(|cycle| Certificate::EvenHole { cycle })
        }
        Target::Kind(Kind::Theta) => theta(g, s),
        Target::Kind(Kind::Prism) => prism(g, s),
        Target::Kind(Kind::Pyramid) => pyramid(g, s),
        Target::Kind(Kind::Wheel) => wheel(g, s, false),
        Target::EvenWheel => wheel(g, s, true),
    }
}

/// The hole induced by `s`, in canonical order.
pub(crate) fn hole(g: &Graph, s: u64) -> Option<Vec<usize>> {
    let k = s.count_ones() as usize;
    if k < 4 || mask_iter(s).any(|v| deg_in(g, v, s) != 2) {
        return None;
    }
    let start = s.trailing_zeros() as usize;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = (g.nbr_mask(start) & s).trailing_zeros() as usize;
    while cur != start {
        cycle.push(cur);
        let next = (g.nbr_mask(cur) & s & !(1u64 << prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    (cycle.len() == k).then(|| canonical_cycle(&cycle))
}

/// Follows degree-2 vertices from `from` through `first` until reaching a
/// vertex of `stop`. Returns the walk including both ends.
fn walk(g: &Graph, s: u64, stop: u64, from: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![from, first];
    let mut prev = from;
    let mut cur = first;
    while stop & (1u64 << cur) == 0 {
        if path.len() > 64 {
            return None;
        }
        let rest = g.nbr_mask(cur) & s & !(1u64 << prev);
        if rest.count_ones() != 1 {
            return None;
        }
        prev = cur;
        cur = rest.trailing_zeros() as usize;
        path.push(cur);
    }
    Some(path)
}

fn degree_split(g: &Graph, s: u64) -> Option<u64> {
    let mut three = 0u64;
    for v in mask_iter(s) {
        match deg_in(g, v, s) {
            2 => {}
            3 => three |= 1u64 << v,
            _ => return None,
        }
    }
    Some(three)
}

fn covered(paths: &[Vec<usize>], s: u64) -> bool {
    let mut m = 0u64;
    let mut count = 0;
    for p in paths {
        for &v in p {
            if m & (1u64 << v) == 0 {
                m |= 1u64 << v;
                count += 1;
            }
        }
    }
    m == s && count == s.count_ones()
}

fn theta(g: &Graph, s: u64) -> Option<Certificate> {
    let three = degree_split(g, s)?;
    if three.count_ones() != 2 {
        return None;
    }
    let a = three.trailing_zeros() as usize;
    let b = 63 - three.leading_zeros() as usize;
    if g.has_edge(a, b) {
        return None;
    }
    let mut paths = Vec::with_capacity(3);
    for first in mask_iter(g.nbr_mask(a) & s) {
        let p = walk(g, s, three, a, first)?;
        if *p.last().unwrap() != b {
            return None;
        }
        paths.push(p);
    }
    if !covered(&paths, s) {
        return None;
    }
    Some(Certificate::Theta { ends: [a, b], paths: paths.try_into().ok()? })
}

/// Triangles of `G[s]` among the vertices of `within`.
fn triangles(g: &Graph, s: u64, within: u64) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in mask_iter(within) {
        for v in mask_iter(g.nbr_mask(u) & within & s) {
            if v <= u {
                continue;
            }
            for w in mask_iter(g.nbr_mask(u) & g.nbr_mask(v) & within & s) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

fn prism(g: &Graph, s: u64) -> Option<Certificate> {
    let three = degree_split(g, s)?;
    if three.count_ones() != 6 {
        return None;
    }
    let tris = triangles(g, s, s);
    if tris.len() != 2 {
        return None;
    }
    let (ta, tb) = (tris[0], tris[1]);
    let mask_a: u64 = ta.iter().map(|&v| 1u64 << v).sum();
    let mask_b: u64 = tb.iter().map(|&v| 1u64 << v).sum();
    if mask_a & mask_b != 0 || mask_a | mask_b != three {
        return None;
    }
    let mut paths = Vec::with_capacity(3);
    let mut ends = [0usize; 3];
    for (i, &a) in ta.iter().enumerate() {
        let out = g.nbr_mask(a) & s & !mask_a;
        if out.count_ones() != 1 {
            return None;
        }
        let p = walk(g, s, three, a, out.trailing_zeros() as usize)?;
        let end = *p.last().unwrap();
        if mask_b & (1u64 << end) == 0 {
            return None;
        }
        ends[i] = end;
        paths.push(p);
    }
    if ends[0] == ends[1] || ends[0] == ends[2] || ends[1] == ends[2] || !covered(&paths, s) {
        return None;
    }
    Some(Certificate::Prism { triangle_a: ta, triangle_b: ends, paths: paths.try_into().ok()? })
}

fn pyramid(g: &Graph, s: u64) -> Option<Certificate> {
    let three = degree_split(g, s)?;
    if three.count_ones() != 4 {
        return None;
    }
    let tris = triangles(g, s, s);
    if tris.len() != 1 {
        return None;
    }
    let base = tris[0];
    let mask_base: u64 = base.iter().map(|&v| 1u64 << v).sum();
    if three & mask_base != mask_base {
        return None;
    }
    let apex = (three & !mask_base).trailing_zeros() as usize;
    let mut by_base: [Option<Vec<usize>>; 3] = [None, None, None];
    for first in mask_iter(g.nbr_mask(apex) & s) {
        let p = walk(g, s, three, apex, first)?;
        let end = *p.last().unwrap();
        let i = base.iter().position(|&b| b == end)?;
        if by_base[i].is_some() {
            return None;
        }
        by_base[i] = Some(p);
    }
    let paths: Vec<Vec<usize>> = by_base.into_iter().collect::<Option<_>>()?;
    if paths.iter().filter(|p| p.len() >= 3).count() < 2 || !covered(&paths, s) {
        return None;
    }
    // Walks from the apex that pass through a base vertex would have
    // stopped there, so the tails are disjoint once coverage holds.
    Some(Certificate::Pyramid { apex, base, paths: paths.try_into().ok()? })
}

fn wheel(g: &Graph, s: u64, even: bool) -> Option<Certificate> {
    for x in mask_iter(s) {
        let rest = s & !(1u64 << x);
        if deg_in(g, x, rest) < 3 {
            continue;
        }
        if let Some(h) = hole(g, rest) {
            let flags = WheelFlags::compute(g, &h, x);
            if !even || flags.is_even {
                return Some(Certificate::Wheel { hole: h, center: x, flags });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{self, cycle, triangular_prism};

    fn all(g: &Graph) -> u64 {
        g.full_mask()
    }

    #[test]
    fn whole_graph_templates() {
        let t = named::theta([1, 2, 3]);
        assert!(matches!(recognize(&t, all(&t), Kind::Theta.into()), Some(Certificate::Theta { .. })));
        let p = triangular_prism();
        assert!(recognize(&p, all(&p), Kind::Prism.into()).is_some());
        assert!(recognize(&p, all(&p), Kind::Theta.into()).is_none());
        let w = named::wheel(6, &[0, 1, 2, 3]);
        let c = recognize(&w, all(&w), Target::EvenWheel).unwrap();
        assert_eq!(c.wheel_flags().unwrap().neighbor_count, 4);
        assert!(recognize(&cycle(6), all(&cycle(6)), Kind::EvenHole.into()).is_some());
        assert!(recognize(&cycle(5), all(&cycle(5)), Kind::EvenHole.into()).is_none());
    }

    #[test]
    fn pyramid_needs_two_long_paths() {
        // Apex 0, base 1 2 3; paths 0-1, 0-4-2, 0-5-3.
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 1), (0, 4), (4, 2), (0, 5), (5, 3)]).unwrap();
        let c = recognize(&g, all(&g), Kind::Pyramid.into()).unwrap();
        c.validate(&g).unwrap();
        // Two short paths: 0-1, 0-2, 0-5-3 has two triangles, so not a pyramid.
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (0, 1), (0, 2), (0, 4), (4, 3)]).unwrap();
        assert!(recognize(&g, all(&g), Kind::Pyramid.into()).is_none());
    }
}
