//! Cutsets forced by proper wheels, and the pyramid attachment check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structures::{sectors, Certificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcerResult {
    /// `N' ∪ {x}`.
    pub cutset: VertexSet,
    pub q_interior: VertexSet,
    pub w: VertexSet,
    pub z: VertexSet,
    /// Whether `Q*` and `W ∪ Z` lie in different components of `G \ cutset`.
    pub separated: bool,
    /// When not separated: a path from `Q*` to `W ∪ Z` avoiding the cutset.
    /// This is evidence that the host is outside the class.
    pub bridge: Option<Vec<usize>>,
}

/// The cutset around a proper, non-universal wheel `(H, x)` and a long
/// sector `Q` (listed from `x1` to `x2`, in either direction along `H`).
pub fn wheel_forcer_cutset(g: &Graph, wheel: &Certificate, sector: &[usize]) -> Result<ForcerResult> {
    let Certificate::Wheel { hole, center, flags } = wheel else {
        return Err(Error::Input("expected a WHEEL certificate".into()));
    };
    wheel.validate(g)?;
    let x = *center;
    if !flags.is_proper {
        return Err(Error::Precondition("wheel is not proper".into()));
    }
    if flags.is_universal {
        return Err(Error::Precondition("wheel is universal, so it has no long sector".into()));
    }
    let mut reversed = sector.to_vec();
    reversed.reverse();
    let known = sectors(g, wheel)?;
    let is_long_sector = known.iter().any(|s| s.long && (s.path == sector || s.path == reversed));
    if !is_long_sector {
        return Err(Error::Precondition(format!("{sector:?} is not a long sector of the wheel")));
    }
    let (x1, x2) = (sector[0], sector[sector.len() - 1]);
    let k = hole.len();
    let i1 = hole.iter().position(|&v| v == x1).unwrap();
    // H \ {x1} as a path, and each vertex's position on it.
    let line: Vec<usize> = (1..k).map(|d| hole[(i1 + d) % k]).collect();
    let pos = |v: usize| line.iter().position(|&u| u == v).unwrap();
    let p2 = pos(x2);
    let spokes: Vec<usize> = hole.iter().copied().filter(|&h| g.has_edge(h, x)).collect();
    let w: VertexSet = spokes
        .iter()
        .copied()
        .filter(|&h| h != x1)
        .filter(|&h| {
            let (lo, hi) = (p2.min(pos(h)), p2.max(pos(h)));
            line[lo..=hi].iter().filter(|&&u| g.has_edge(u, x)).count() % 2 == 0
        })
        .collect();
    let q_interior = VertexSet::from_vec(sector[1..sector.len() - 1].to_vec());
    let z: VertexSet = hole
        .iter()
        .copied()
        .filter(|&h| !sector.contains(&h) && !g.has_edge(h, x))
        .collect();
    let mut cutset: VertexSet = spokes.iter().copied().filter(|&h| !w.contains(h)).collect();
    // N(x) off the hole belongs to N' as well.
    for &v in g.neighbors(x) {
        if !w.contains(v) {
            cutset.insert(v);
        }
    }
    cutset.insert(x);
    let targets = w.union(&z);
    let blocked: Vec<bool> = (0..g.n()).map(|v| cutset.contains(v)).collect();
    let mut bridge = None;
    'search: for s in &q_interior {
        for t in &targets {
            if let Some(p) = g.shortest_path(s, t, |v| !blocked[v]) {
                bridge = Some(p);
                break 'search;
            }
        }
    }
    Ok(ForcerResult { cutset, q_interior, w, z, separated: bridge.is_none(), bridge })
}

/// Whether some vertex of `{a, b1, b2, b3}` has a neighbour in the interior
/// of `p`, where `p` joins `P_i \ {a, a_i, b_i}` to `P_j \ {a, a_j, b_j}`.
pub fn pyramid_neighborhood_check(g: &Graph, pyramid: &Certificate, p: &[usize]) -> Result<bool> {
    let Certificate::Pyramid { apex, base, paths } = pyramid else {
        return Err(Error::Input("expected a PYRAMID certificate".into()));
    };
    pyramid.validate(g)?;
    if p.len() < 2 || !g.is_induced_path(p) {
        return Err(Error::Input(format!("{p:?} is not an induced path with two ends")));
    }
    // Allowed ends on P_i: everything but a, a_i and b_i.
    let region = |v: usize| paths.iter().position(|q| q.len() > 3 && q[2..q.len() - 1].contains(&v));
    let (Some(i), Some(j)) = (region(p[0]), region(p[p.len() - 1])) else {
        return Err(Error::Input("path ends are not in the allowed parts of the pyramid paths".into()));
    };
    if i == j {
        return Err(Error::Input("path ends lie on the same pyramid path".into()));
    }
    let interior = &p[1..p.len() - 1];
    let tops = [*apex, base[0], base[1], base[2]];
    Ok(tops.iter().any(|&t| interior.iter().any(|&v| g.has_edge(t, v))))
}

/// For a wheel `(H, v)`: no component `D` of `G \ N[v]` has `H ⊆ N[D]`.
pub fn wheel_star_cutset_holds(g: &Graph, hole: &[usize], v: usize) -> bool {
    let closed = g.neighborhood(&VertexSet::singleton(v), true).expect("valid vertex");
    g.components(&closed).iter().all(|d| {
        hole.iter().any(|&h| !d.contains(h) && !g.neighbors(h).iter().any(|&u| d.contains(u)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::wheel;
    use crate::structures::WheelFlags;

    fn wheel_cert(g: &Graph, hole: Vec<usize>, x: usize) -> Certificate {
        let flags = WheelFlags::compute(g, &hole, x);
        Certificate::Wheel { hole, center: x, flags }
    }

    #[test]
    fn c6_three_spokes() {
        let g = wheel(6, &[0, 2, 4]);
        let c = wheel_cert(&g, (0..6).collect(), 6);
        let r = wheel_forcer_cutset(&g, &c, &[0, 1, 2]).unwrap();
        assert_eq!(r.w.as_slice(), &[4]);
        assert_eq!(r.z.as_slice(), &[3, 5]);
        assert_eq!(r.cutset.as_slice(), &[0, 2, 6]);
        assert!(r.separated);
    }

    #[test]
    fn preconditions() {
        let g = wheel(6, &[0, 1, 2]);
        let c = wheel_cert(&g, (0..6).collect(), 6);
        assert!(matches!(wheel_forcer_cutset(&g, &c, &[2, 3, 4, 5, 0]), Err(Error::Precondition(_))));
        let g = wheel(5, &[0, 1, 2, 3, 4]);
        let c = wheel_cert(&g, (0..5).collect(), 5);
        assert!(matches!(wheel_forcer_cutset(&g, &c, &[0, 1]), Err(Error::Precondition(_))));
    }

    #[test]
    fn wheel_star_cutset() {
        let g = wheel(6, &[0, 2, 4]);
        assert!(wheel_star_cutset_holds(&g, &[0, 1, 2, 3, 4, 5], 6));
    }

    #[test]
    fn pyramid_paths() {
        // Apex 0; paths 0-1-2-3, 0-4-5-6, 0-7; base 3 6 7.
        let edges = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7), (3, 6), (6, 7), (3, 7)];
        let g = Graph::from_edges(8, &edges).unwrap();
        let pyr = Certificate::Pyramid {
            apex: 0,
            base: [3, 6, 7],
            paths: [vec![0, 1, 2, 3], vec![0, 4, 5, 6], vec![0, 7]],
        };
        // Through the base: 2-3-6-5.
        assert!(pyramid_neighborhood_check(&g, &pyr, &[2, 3, 6, 5]).unwrap());
        assert!(pyramid_neighborhood_check(&g, &pyr, &[1, 2]).is_err());
    }
}
