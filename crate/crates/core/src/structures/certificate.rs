//! Witnesses for induced structures and their definitional validators.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Certificate kinds in tie-breaking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Kind {
    C4,
    EvenHole,
    Theta,
    Prism,
    Pyramid,
    Wheel,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::C4, Kind::EvenHole, Kind::Theta, Kind::Prism, Kind::Pyramid, Kind::Wheel];

    pub fn name(self) -> &'static str {
        match self {
            Kind::C4 => "C4",
            Kind::EvenHole => "EVEN_HOLE",
            Kind::Theta => "THETA",
            Kind::Prism => "PRISM",
            Kind::Pyramid => "PYRAMID",
            Kind::Wheel => "WHEEL",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        Kind::ALL.into_iter().find(|k| k.name() == norm)
    }
}

/// What a search looks for. `EvenWheel` yields `WHEEL` certificates whose
/// `is_even` flag is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Kind(Kind),
    EvenWheel,
}

impl From<Kind> for Target {
    fn from(k: Kind) -> Self {
        Target::Kind(k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WheelFlags {
    pub neighbor_count: usize,
    pub is_even: bool,
    pub is_universal: bool,
    pub is_twin: bool,
    pub is_short_pyramid: bool,
    pub is_proper: bool,
}

impl WheelFlags {
    /// Flags of `(hole, x)`. `hole` is in cyclic order.
    pub fn compute(g: &Graph, hole: &[usize], x: usize) -> WheelFlags {
        let k = hole.len();
        let spokes: Vec<usize> = (0..k).filter(|&i| g.has_edge(hole[i], x)).collect();
        let count = spokes.len();
        let adjacent_pairs = (0..k).filter(|&i| spokes.contains(&i) && spokes.contains(&((i + 1) % k))).count();
        // Three spokes inducing a path of length two: two consecutive pairs.
        let is_twin = count == 3 && adjacent_pairs == 2;
        let is_short_pyramid = count == 3 && adjacent_pairs == 1;
        WheelFlags {
            neighbor_count: count,
            is_even: count.is_multiple_of(2),
            is_universal: count == k,
            is_twin,
            is_short_pyramid,
            is_proper: !is_twin && !is_short_pyramid,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    C4 { cycle: Vec<usize> },
    EvenHole { cycle: Vec<usize> },
    /// Each path runs from `ends[0]` to `ends[1]`.
    Theta { ends: [usize; 2], paths: [Vec<usize>; 3] },
    /// Path `i` runs from `triangle_a[i]` to `triangle_b[i]`.
    Prism { triangle_a: [usize; 3], triangle_b: [usize; 3], paths: [Vec<usize>; 3] },
    /// Path `i` runs from `apex` to `base[i]`.
    Pyramid { apex: usize, base: [usize; 3], paths: [Vec<usize>; 3] },
    Wheel { hole: Vec<usize>, center: usize, flags: WheelFlags },
}

impl Certificate {
    pub fn kind(&self) -> Kind {
        match self {
            Certificate::C4 { .. } => Kind::C4,
            Certificate::EvenHole { .. } => Kind::EvenHole,
            Certificate::Theta { .. } => Kind::Theta,
            Certificate::Prism { .. } => Kind::Prism,
            Certificate::Pyramid { .. } => Kind::Pyramid,
            Certificate::Wheel { .. } => Kind::Wheel,
        }
    }

    /// All vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = match self {
            Certificate::C4 { cycle } | Certificate::EvenHole { cycle } => cycle.clone(),
            Certificate::Theta { paths, .. } | Certificate::Prism { paths, .. } | Certificate::Pyramid { paths, .. } => {
                paths.iter().flatten().copied().collect()
            }
            Certificate::Wheel { hole, center, .. } => {
                let mut v = hole.clone();
                v.push(*center);
                v
            }
        };
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn wheel_flags(&self) -> Option<&WheelFlags> {
        match self {
            Certificate::Wheel { flags, .. } => Some(flags),
            _ => None,
        }
    }

    pub fn matches(&self, target: Target) -> bool {
        match target {
            Target::Kind(k) => self.kind() == k,
            Target::EvenWheel => self.wheel_flags().is_some_and(|f| f.is_even),
        }
    }

    pub fn roles_json(&self) -> serde_json::Value {
        match self {
            Certificate::C4 { cycle } | Certificate::EvenHole { cycle } => json!({ "cycle": cycle }),
            Certificate::Theta { ends, paths } => json!({ "ends": ends, "paths": paths }),
            Certificate::Prism { triangle_a, triangle_b, paths } => {
                json!({ "triangle_a": triangle_a, "triangle_b": triangle_b, "paths": paths })
            }
            Certificate::Pyramid { apex, base, paths } => json!({ "apex": apex, "base": base, "paths": paths }),
            Certificate::Wheel { hole, center, flags } => json!({ "hole": hole, "center": center, "flags": flags }),
        }
    }

    /// Checks the defining conditions literally against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: &str| Err(Error::Input(format!("{} certificate invalid: {msg}", self.kind().name())));
        if self.vertices().iter().any(|&v| v >= g.n()) {
            return fail("vertex out of range");
        }
        match self {
            Certificate::C4 { cycle } => {
                if cycle.len() != 4 || !g.is_hole(cycle) {
                    return fail("not an induced 4-cycle");
                }
            }
            Certificate::EvenHole { cycle } => {
                if cycle.len() % 2 != 0 || !g.is_hole(cycle) {
                    return fail("not an even hole");
                }
            }
            Certificate::Theta { ends: [a, b], paths } => {
                if g.has_edge(*a, *b) {
                    return fail("ends adjacent");
                }
                for p in paths {
                    if p.len() < 3 || p[0] != *a || p[p.len() - 1] != *b || !g.is_induced_path(p) {
                        return fail("path is not an induced a-b path of length >= 2");
                    }
                }
                let interiors: Vec<&[usize]> = paths.iter().map(|p| &p[1..p.len() - 1]).collect();
                if !pairwise_disjoint_anticomplete(g, &interiors) {
                    return fail("interiors not pairwise disjoint and anticomplete");
                }
            }
            Certificate::Prism { triangle_a, triangle_b, paths } => {
                if !g.is_clique(triangle_a) || !g.is_clique(triangle_b) {
                    return fail("ends are not triangles");
                }
                for (i, p) in paths.iter().enumerate() {
                    if p.len() < 2 || p[0] != triangle_a[i] || p[p.len() - 1] != triangle_b[i] || !g.is_induced_path(p)
                    {
                        return fail("path is not an induced a_i-b_i path of length >= 1");
                    }
                }
                let all: Vec<&[usize]> = paths.iter().map(|p| p.as_slice()).collect();
                if !pairwise_disjoint(&all) {
                    return fail("paths not vertex-disjoint");
                }
                // Only the triangle edges run between different paths.
                for i in 0..3 {
                    for j in i + 1..3 {
                        for &u in &paths[i] {
                            for &v in &paths[j] {
                                let allowed =
                                    (u == triangle_a[i] && v == triangle_a[j]) || (u == triangle_b[i] && v == triangle_b[j]);
                                if g.has_edge(u, v) && !allowed {
                                    return fail("extra edge between paths");
                                }
                            }
                        }
                    }
                }
            }
            Certificate::Pyramid { apex, base, paths } => {
                if !g.is_clique(base) {
                    return fail("base is not a triangle");
                }
                let mut long = 0;
                for (i, p) in paths.iter().enumerate() {
                    if p.len() < 2 || p[0] != *apex || p[p.len() - 1] != base[i] || !g.is_induced_path(p) {
                        return fail("path is not an induced apex-b_i path");
                    }
                    if p.len() >= 3 {
                        long += 1;
                    }
                }
                if long < 2 {
                    return fail("fewer than two paths of length >= 2");
                }
                let tails: Vec<&[usize]> = paths.iter().map(|p| &p[1..]).collect();
                if !pairwise_disjoint(&tails) {
                    return fail("paths minus apex not disjoint");
                }
                for i in 0..3 {
                    for j in i + 1..3 {
                        for &u in tails[i] {
                            for &v in tails[j] {
                                if g.has_edge(u, v) && !(u == base[i] && v == base[j]) {
                                    return fail("extra edge between paths");
                                }
                            }
                        }
                    }
                }
            }
            Certificate::Wheel { hole, center, flags } => {
                if !g.is_hole(hole) || hole.contains(center) {
                    return fail("not a hole plus outside centre");
                }
                let computed = WheelFlags::compute(g, hole, *center);
                if computed.neighbor_count < 3 {
                    return fail("centre has fewer than three neighbours on the hole");
                }
                if computed != *flags {
                    return fail("flags disagree with the graph");
                }
            }
        }
        Ok(())
    }
}

fn pairwise_disjoint(sets: &[&[usize]]) -> bool {
    let mut all: Vec<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == total
}

fn pairwise_disjoint_anticomplete(g: &Graph, sets: &[&[usize]]) -> bool {
    if !pairwise_disjoint(sets) {
        return false;
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v))) {
                return false;
            }
        }
    }
    true
}

/// `{kind, roles, vertices}` in that order.
impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 3)?;
        st.serialize_field("kind", self.kind().name())?;
        st.serialize_field("roles", &self.roles_json())?;
        st.serialize_field("vertices", &self.vertices())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn wheel_taxonomy() {
        // Universal wheel on C5.
        let g = wheel(5, &[0, 1, 2, 3, 4]);
        let f = WheelFlags::compute(&g, &[0, 1, 2, 3, 4], 5);
        assert!(f.is_universal && f.is_proper && !f.is_even);
        // Twin wheel: three consecutive spokes.
        let g = wheel(6, &[0, 1, 2]);
        let f = WheelFlags::compute(&g, &[0, 1, 2, 3, 4, 5], 6);
        assert!(f.is_twin && !f.is_proper);
        // Short pyramid: exactly one adjacent pair among three spokes.
        let g = wheel(6, &[0, 1, 3]);
        let f = WheelFlags::compute(&g, &[0, 1, 2, 3, 4, 5], 6);
        assert!(f.is_short_pyramid && !f.is_proper);
        // Three pairwise non-adjacent spokes.
        let g = wheel(6, &[0, 2, 4]);
        let f = WheelFlags::compute(&g, &[0, 1, 2, 3, 4, 5], 6);
        assert!(f.is_proper && !f.is_twin && !f.is_short_pyramid);
        // Spoke pair wrapping around the hole's closing edge.
        let g = wheel(6, &[5, 0, 1]);
        let f = WheelFlags::compute(&g, &[0, 1, 2, 3, 4, 5], 6);
        assert!(f.is_twin);
    }

    #[test]
    fn json_shape() {
        let c = Certificate::C4 { cycle: vec![0, 1, 2, 3] };
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"kind":"C4","roles":{"cycle":[0,1,2,3]},"vertices":[0,1,2,3]}"#);
    }

    #[test]
    fn validator_rejects_broken_theta() {
        let g = complete_bipartite(2, 3);
        let ok = Certificate::Theta { ends: [0, 1], paths: [vec![0, 2, 1], vec![0, 3, 1], vec![0, 4, 1]] };
        ok.validate(&g).unwrap();
        let bad = Certificate::Theta { ends: [0, 1], paths: [vec![0, 2, 1], vec![0, 2, 1], vec![0, 4, 1]] };
        assert!(bad.validate(&g).is_err());
    }

    #[test]
    fn kind_parse() {
        assert_eq!(Kind::parse("even-hole"), Some(Kind::EvenHole));
        assert_eq!(Kind::parse("theta"), Some(Kind::Theta));
        assert_eq!(Kind::parse("nope"), None);
    }
}
