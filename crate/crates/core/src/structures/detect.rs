//! Existence tests driven by the hole list. Every structure contains a hole
//! (a theta or prism has one through two of its paths, a pyramid through two
//! paths of which one is long, a wheel by definition), so each test extends a
//! hole by the remaining part and is exact once all holes are known.

use super::certificate::{Certificate, Kind, Target, WheelFlags};
use crate::graph::Graph;
use crate::search::Budget;

/// Some structure of `target`, or `None` if there is none. `holes` must be
/// the complete hole list. `None` is also returned when the budget runs out,
/// which the caller detects through `budget.exhausted()`.
pub(crate) fn detect(g: &Graph, holes: &[Vec<usize>], target: Target, budget: &mut Budget) -> Option<Certificate> {
    for h in holes {
        if !budget.tick() {
            return None;
        }
        let found = match target {
            Target::Kind(Kind::C4) => (h.len() == 4).then(|| Certificate::C4 { cycle: h.clone() }),
            Target::Kind(Kind::EvenHole) => (h.len() % 2 == 0).then(|| Certificate::EvenHole { cycle: h.clone() }),
            Target::Kind(Kind::Theta) => theta_on(g, h),
            Target::Kind(Kind::Prism) => prism_on(g, h),
            Target::Kind(Kind::Pyramid) => pyramid_on(g, h),
            Target::Kind(Kind::Wheel) => wheels_on(g, h).next(),
            Target::EvenWheel => wheels_on(g, h).find(|c| c.wheel_flags().is_some_and(|f| f.is_even)),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

/// All wheels `(h, x)` over outside vertices `x`, by increasing `x`.
pub(crate) fn wheels_on<'a>(g: &'a Graph, h: &'a [usize]) -> impl Iterator<Item = Certificate> + 'a {
    let mut on = vec![false; g.n()];
    for &v in h {
        on[v] = true;
    }
    (0..g.n()).filter(move |&x| !on[x]).filter_map(move |x| {
        let count = h.iter().filter(|&&v| g.has_edge(v, x)).count();
        (count >= 3).then(|| Certificate::Wheel { hole: h.to_vec(), center: x, flags: WheelFlags::compute(g, h, x) })
    })
}

/// `h` read from index `i` to index `j` going forward (inclusive).
fn arc(h: &[usize], i: usize, j: usize) -> Vec<usize> {
    let k = h.len();
    let mut out = vec![h[i]];
    let mut p = i;
    while p != j {
        p = (p + 1) % k;
        out.push(h[p]);
    }
    out
}

fn marks(n: usize, set: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut m = vec![false; n];
    for v in set {
        m[v] = true;
    }
    m
}

/// Theta whose paths include the two arcs of `h` between nonadjacent `a`, `b`.
fn theta_on(g: &Graph, h: &[usize]) -> Option<Certificate> {
    let k = h.len();
    let on_h = marks(g.n(), h.iter().copied());
    for i in 0..k {
        for j in i + 2..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            let (a, b) = (h[i], h[j]);
            // Interior of the third path: off H and anticomplete to H \ {a, b}.
            let mut blocked = on_h.clone();
            for (idx, &v) in h.iter().enumerate() {
                if idx != i && idx != j {
                    for &w in g.neighbors(v) {
                        blocked[w] = true;
                    }
                }
            }
            if let Some(p3) = g.shortest_path(a, b, |v| !blocked[v]) {
                let p1 = arc(h, i, j);
                let mut p2 = arc(h, j, i);
                p2.reverse();
                let mut paths = [p1, p2, p3];
                paths.sort();
                return Some(Certificate::Theta { ends: [a, b], paths });
            }
        }
    }
    None
}

/// Prism made of `h` minus two disjoint edges plus a third path.
fn prism_on(g: &Graph, h: &[usize]) -> Option<Certificate> {
    let k = h.len();
    let on_h = marks(g.n(), h.iter().copied());
    let mut near = vec![false; g.n()];
    for &v in h {
        near[v] = true;
        for &w in g.neighbors(v) {
            near[w] = true;
        }
    }
    // Outside vertices whose neighbours on H are exactly one hole edge.
    let mut attached: Vec<Vec<usize>> = vec![Vec::new(); k];
    for x in 0..g.n() {
        if on_h[x] {
            continue;
        }
        let idx: Vec<usize> = (0..k).filter(|&i| g.has_edge(h[i], x)).collect();
        if idx.len() == 2 {
            let (p, q) = (idx[0], idx[1]);
            if q == p + 1 {
                attached[p].push(x);
            } else if p == 0 && q == k - 1 {
                attached[k - 1].push(x);
            }
        }
    }
    // Edge e is h[e] h[e+1].
    for e in 0..k {
        for f in e + 2..k {
            if (f + 1) % k == e {
                continue;
            }
            for &a3 in &attached[e] {
                for &b3 in &attached[f] {
                    if a3 == b3 {
                        continue;
                    }
                    let Some(p3) = g.shortest_path(a3, b3, |v| !near[v]) else { continue };
                    // Removing both edges leaves h[e+1]..h[f] and h[f+1]..h[e].
                    let (a1, b1) = (h[(e + 1) % k], h[f]);
                    let (a2, b2) = (h[e], h[(f + 1) % k]);
                    let p1 = arc(h, (e + 1) % k, f);
                    let mut p2 = arc(h, (f + 1) % k, e);
                    p2.reverse();
                    return Some(Certificate::Prism {
                        triangle_a: [a1, a2, a3],
                        triangle_b: [b1, b2, b3],
                        paths: [p1, p2, p3],
                    });
                }
            }
        }
    }
    None
}

/// Pyramid made of `h` (apex on `h`, base edge on `h`) plus a third path.
fn pyramid_on(g: &Graph, h: &[usize]) -> Option<Certificate> {
    let k = h.len();
    let on_h = marks(g.n(), h.iter().copied());
    for ai in 0..k {
        let a = h[ai];
        // Interior of the third path: off H, anticomplete to H \ {a}.
        let mut blocked = on_h.clone();
        for (idx, &v) in h.iter().enumerate() {
            if idx != ai {
                for &w in g.neighbors(v) {
                    blocked[w] = true;
                }
            }
        }
        for e in 0..k {
            let (i1, i2) = (e, (e + 1) % k);
            if i1 == ai || i2 == ai {
                continue;
            }
            let (b1, b2) = (h[i1], h[i2]);
            for b3 in 0..g.n() {
                if on_h[b3] {
                    continue;
                }
                let hits: Vec<usize> = (0..k).filter(|&i| i != ai && g.has_edge(h[i], b3)).collect();
                if hits != [i1.min(i2), i1.max(i2)] {
                    continue;
                }
                // P1 runs a..b1 avoiding b2, P2 runs a..b2 avoiding b1.
                let p1 = arc(h, ai, i1);
                let p2 = arc(h, i2, ai).into_iter().rev().collect::<Vec<_>>();
                let p3 = if g.has_edge(a, b3) {
                    if p1.len() < 3 || p2.len() < 3 {
                        continue;
                    }
                    vec![a, b3]
                } else {
                    match g.shortest_path(a, b3, |v| !blocked[v]) {
                        Some(p) => p,
                        None => continue,
                    }
                };
                return Some(Certificate::Pyramid { apex: a, base: [b1, b2, b3], paths: [p1, p2, p3] });
            }
        }
    }
    None
}
