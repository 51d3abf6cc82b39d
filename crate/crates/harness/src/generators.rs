//! Seeded graph families. Every generated graph carries a class verdict
//! computed by the detectors.
//!
//! The filtered families grow the graph one vertex at a time: the new
//! vertex gets a random neighbourhood (each earlier vertex independently
//! with probability `p`) and the draw is rejected and repeated until the
//! graph stays in the class. The classes are hereditary, so every prefix of
//! an accepted graph is itself in the class and nothing is lost by checking
//! each step.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ehf_core::graph::named;
use ehf_core::structures::{class_membership, find_structure, Kind, Membership};
use ehf_core::{Budget, Error, Graph, Outcome, Result};

/// Draws allowed for a single vertex before the whole graph is restarted.
const TRIES_PER_VERTEX: usize = 200;
/// Restarts before giving up.
const RESTARTS: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    /// Random graphs filtered to the class.
    RandomGnpFilteredC,
    /// Random graphs filtered to the class with no clique of size `t`.
    RandomGnpFilteredCt { t: usize },
    /// Random chordal graphs: each new vertex is attached to a random clique.
    ChordalRandom,
    Cycles,
    /// Random graphs filtered to be theta-free only.
    ThetaFreeRandom,
    /// A fixed library of small named graphs, picked by `seed`.
    Handcrafted,
}

impl Family {
    pub fn parse(name: &str, t: Option<usize>) -> Result<Family> {
        Ok(match name {
            "random_gnp_filtered_C" | "gnp_c" => Family::RandomGnpFilteredC,
            "random_gnp_filtered_Ct" | "gnp_ct" => {
                Family::RandomGnpFilteredCt { t: t.ok_or_else(|| Error::Input("family needs --t".into()))? }
            }
            "chordal_random" | "chordal" => Family::ChordalRandom,
            "cycles" => Family::Cycles,
            "theta_free_random" | "theta_free" => Family::ThetaFreeRandom,
            "handcrafted_library" | "handcrafted" => Family::Handcrafted,
            _ => return Err(Error::Input(format!("unknown family '{name}'"))),
        })
    }

    /// Default edge probability for the filtered families.
    pub fn default_p(n: usize) -> f64 {
        (3.0 / n.max(1) as f64).clamp(0.15, 0.5)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    /// Edge probability for the filtered families.
    pub p: Option<f64>,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec { family, n, seed, p: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Generated {
    #[serde(skip)]
    pub graph: Graph,
    pub name: String,
    pub verdict: String,
    pub membership: Membership,
    /// For the theta-free family: no theta was found.
    pub theta_free: Option<bool>,
    /// Neighbourhood draws made and accepted (filtered families).
    pub draws: usize,
    pub accepted: usize,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let p = spec.p.unwrap_or_else(|| Family::default_p(n));
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Input(format!("edge probability {p} outside [0, 1]")));
    }
    let (graph, name, draws, accepted) = match spec.family {
        Family::RandomGnpFilteredC => grow(n, p, &mut rng, |g| in_class(g, None))?,
        Family::RandomGnpFilteredCt { t } => grow(n, p, &mut rng, |g| in_class(g, Some(t)))?,
        Family::ThetaFreeRandom => grow(n, p, &mut rng, |g| {
            matches!(find_structure(g, Kind::Theta, &mut Budget::default()), Outcome::Absent)
        })?,
        Family::ChordalRandom => (chordal(n, &mut rng), format!("chordal_{n}"), 0, 0),
        Family::Cycles => {
            if n < 3 {
                return Err(Error::Input("cycles need n >= 3".into()));
            }
            (named::cycle(n), format!("C{n}"), 0, 0)
        }
        Family::Handcrafted => {
            let lib = library();
            let (name, g) = lib[(spec.seed % lib.len() as u64) as usize].clone();
            (g, name, 0, 0)
        }
    };
    let t = match spec.family {
        Family::RandomGnpFilteredCt { t } => Some(t),
        _ => None,
    };
    let membership = class_membership(&graph, t, &mut Budget::default());
    let theta_free = (spec.family == Family::ThetaFreeRandom)
        .then(|| matches!(find_structure(&graph, Kind::Theta, &mut Budget::default()), Outcome::Absent));
    let claims_class = !matches!(spec.family, Family::ThetaFreeRandom | Family::Handcrafted);
    if claims_class && !membership.is_member() {
        return Err(Error::Precondition(format!("generated graph failed verification: {}", membership.label())));
    }
    Ok(Generated { graph, name, verdict: membership.label(), membership, theta_free, draws, accepted })
}

fn in_class(g: &Graph, t: Option<usize>) -> bool {
    class_membership(g, t, &mut Budget::default()).is_member()
}

fn grow(
    n: usize,
    p: f64,
    rng: &mut ChaCha8Rng,
    keep: impl Fn(&Graph) -> bool,
) -> Result<(Graph, String, usize, usize)> {
    let (mut draws, mut accepted) = (0, 0);
    for _ in 0..RESTARTS {
        let mut g = Graph::empty(0);
        let mut stuck = false;
        for v in 0..n {
            let mut placed = false;
            for _ in 0..TRIES_PER_VERTEX {
                draws += 1;
                let edges: Vec<(usize, usize)> = (0..v).filter(|_| rng.random_bool(p)).map(|u| (u, v)).collect();
                let h = g.with_isolated(1).with_edges(&edges)?;
                if keep(&h) {
                    accepted += 1;
                    g = h;
                    placed = true;
                    break;
                }
            }
            if !placed {
                stuck = true;
                break;
            }
        }
        if !stuck {
            return Ok((g, format!("filtered_{n}"), draws, accepted));
        }
    }
    Err(Error::Guardrail(format!(
        "rejection sampling gave up: {accepted} of {draws} draws accepted ({:.2}%)",
        100.0 * accepted as f64 / draws.max(1) as f64
    )))
}

fn chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::empty(n.min(1));
    for v in 1..n {
        let u = rng.random_range(0..v);
        let mut cand: Vec<usize> = g.neighbors(u).to_vec();
        cand.shuffle(rng);
        let mut clique = vec![u];
        for w in cand {
            if rng.random_bool(0.5) && clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        let edges: Vec<(usize, usize)> = clique.into_iter().map(|c| (c, v)).collect();
        g = g.with_isolated(1).with_edges(&edges).expect("new vertex edges are fresh");
    }
    g
}

/// Small named graphs, in and out of the class.
pub fn library() -> Vec<(String, Graph)> {
    use named::*;
    let pyramid = Graph::from_edges(7, &[(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6), (4, 5), (5, 6), (4, 6)]).unwrap();
    vec![
        ("C5".into(), cycle(5)),
        ("C7".into(), cycle(7)),
        ("C6".into(), cycle(6)),
        ("P6".into(), path(6)),
        ("K4".into(), complete(4)),
        ("universal_wheel_5".into(), wheel(5, &[0, 1, 2, 3, 4])),
        ("odd_wheel_9".into(), wheel(9, &[0, 3, 6])),
        ("pyramid".into(), pyramid),
        ("petersen".into(), petersen()),
        ("prism".into(), triangular_prism()),
        ("theta_1_2_3".into(), theta([1, 2, 3])),
        ("K_2_3".into(), complete_bipartite(2, 3)),
        ("grid_3x3".into(), grid(3, 3)),
        ("even_wheel_6".into(), wheel(6, &[0, 1, 3, 4])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_verified() {
        let spec = GeneratorSpec::new(Family::RandomGnpFilteredC, 10, 7);
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.graph.edges(), b.graph.edges());
        assert_eq!(a.verdict, "IN_C");
        let c = generate(&GeneratorSpec::new(Family::Cycles, 7, 0)).unwrap();
        assert_eq!((c.graph.m(), c.verdict.as_str()), (7, "IN_C"));
        let ch = generate(&GeneratorSpec::new(Family::ChordalRandom, 15, 1)).unwrap();
        assert!(ch.membership.is_member());
        let t = generate(&GeneratorSpec::new(Family::RandomGnpFilteredCt { t: 3 }, 9, 3)).unwrap();
        assert_eq!(t.verdict, "IN_C_3");
        let th = generate(&GeneratorSpec::new(Family::ThetaFreeRandom, 9, 3)).unwrap();
        assert_eq!(th.theta_free, Some(true));
    }

    #[test]
    fn library_verdicts() {
        for seed in 0..library().len() as u64 {
            let g = generate(&GeneratorSpec::new(Family::Handcrafted, 0, seed)).unwrap();
            let expect_in = !matches!(g.name.as_str(), "petersen" | "prism" | "theta_1_2_3" | "K_2_3" | "grid_3x3" | "even_wheel_6");
            assert_eq!(g.membership.is_member(), expect_in, "{}", g.name);
        }
    }
}
