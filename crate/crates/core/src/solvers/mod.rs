//! Exact dynamic programming over tree decompositions for five problems,
//! the vertex cover PTAS and the stable set QPTAS, with brute-force
//! oracles and definitional witness checks.

mod approx;
mod dp;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::treedec::TreeDecomposition;

pub use approx::{ptas_vertex_cover, qptas_stable_set, QptasOptions, QPTAS_MAX_N};
pub use dp::{nice_decomposition, NiceKind, NiceNode};

/// Subset brute force is limited to this many vertices.
pub const BRUTE_SET_MAX_N: usize = 20;
/// Colouring brute force is limited to this many vertices.
pub const BRUTE_COLOR_MAX_N: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    StableSet,
    VertexCover,
    FeedbackVertexSet,
    DominatingSet,
    RColoring(usize),
    Coloring,
}

impl Problem {
    pub fn name(&self) -> &'static str {
        match self {
            Problem::StableSet => "STABLE_SET",
            Problem::VertexCover => "VERTEX_COVER",
            Problem::FeedbackVertexSet => "FEEDBACK_VERTEX_SET",
            Problem::DominatingSet => "DOMINATING_SET",
            Problem::RColoring(_) => "R_COLORING",
            Problem::Coloring => "COLORING",
        }
    }

    /// Parses a tag; `r` is required for `R_COLORING`.
    pub fn parse(tag: &str, r: Option<usize>) -> Result<Self> {
        Ok(match tag.to_ascii_uppercase().replace('-', "_").as_str() {
            "STABLE_SET" => Problem::StableSet,
            "VERTEX_COVER" => Problem::VertexCover,
            "FEEDBACK_VERTEX_SET" => Problem::FeedbackVertexSet,
            "DOMINATING_SET" => Problem::DominatingSet,
            "COLORING" => Problem::Coloring,
            "R_COLORING" => match r {
                Some(r) if r >= 1 => Problem::RColoring(r),
                _ => return Err(Error::Input("R_COLORING needs r >= 1".into())),
            },
            _ => return Err(Error::Input(format!("unknown problem '{tag}'"))),
        })
    }

    pub const ALL_SET_PROBLEMS: [Problem; 4] =
        [Problem::StableSet, Problem::VertexCover, Problem::FeedbackVertexSet, Problem::DominatingSet];
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::RColoring(r) => write!(f, "R_COLORING({r})"),
            p => f.write_str(p.name()),
        }
    }
}

impl Serialize for Problem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    /// Colour of every vertex, colours numbered from 0.
    Coloring(Vec<usize>),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    /// Guarantee `value <= (1 + eps) * optimum`.
    UpperApprox { eps: String },
    /// Guarantee `value >= (1 - eps) * optimum`.
    LowerApprox { eps: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nice_nodes: usize,
    pub max_table: usize,
    pub total_entries: usize,
    /// Cliques removed by the PTAS.
    pub cliques_removed: usize,
    /// Recursive QPTAS calls evaluated (memoised).
    pub qptas_calls: usize,
    /// The QPTAS found no admissible `(S, Y)` pair somewhere and solved
    /// that part exactly instead.
    pub fallback: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub problem: Problem,
    /// Set size, or number of colours; for `R_COLORING` 1 when feasible.
    pub value: usize,
    pub feasible: bool,
    pub witness: Witness,
    pub mode: Mode,
    pub stats: Stats,
}

/// Checks the witness against the definition of the problem and the
/// claimed value.
pub fn validate_solution(g: &Graph, s: &Solution) -> Result<()> {
    let fail = |msg: String| Err(Error::Precondition(format!("{} witness rejected: {msg}", s.problem)));
    match (&s.problem, &s.witness) {
        (Problem::RColoring(_), Witness::None) if !s.feasible && s.value == 0 => Ok(()),
        (Problem::RColoring(r), Witness::Coloring(c)) => {
            if !s.feasible || s.value != 1 {
                return fail("feasible colouring reported as infeasible".into());
            }
            check_coloring(g, c, *r).or_else(fail)
        }
        (Problem::Coloring, Witness::Coloring(c)) => {
            check_coloring(g, c, s.value).or_else(fail)?;
            if g.n() > 0 && c.iter().max().map(|m| m + 1) != Some(s.value) {
                return fail("value differs from colours used".into());
            }
            Ok(())
        }
        (p, Witness::Set(x)) if !matches!(p, Problem::RColoring(_) | Problem::Coloring) => {
            g.check_set(x)?;
            if x.len() != s.value {
                return fail(format!("value {} but |witness| = {}", s.value, x.len()));
            }
            if !is_feasible_set(g, *p, x) {
                return fail(format!("{x} is not a feasible solution"));
            }
            Ok(())
        }
        _ => fail("witness kind does not match the problem".into()),
    }
}

fn check_coloring(g: &Graph, c: &[usize], r: usize) -> std::result::Result<(), String> {
    if c.len() != g.n() {
        return Err(format!("{} colours for {} vertices", c.len(), g.n()));
    }
    if let Some(v) = (0..g.n()).find(|&v| c[v] >= r) {
        return Err(format!("vertex {v} has colour {} >= {r}", c[v]));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| c[u] == c[v]) {
        return Err(format!("edge {u}-{v} is monochromatic"));
    }
    Ok(())
}

/// Definitional feasibility of a vertex set for the four set problems.
pub fn is_feasible_set(g: &Graph, p: Problem, x: &VertexSet) -> bool {
    let mut inside = vec![false; g.n()];
    for v in x {
        inside[v] = true;
    }
    match p {
        Problem::StableSet => g.is_stable(x.as_slice()),
        Problem::VertexCover => g.edges().iter().all(|&(u, v)| inside[u] || inside[v]),
        Problem::DominatingSet => (0..g.n()).all(|v| inside[v] || g.neighbors(v).iter().any(|&u| inside[u])),
        Problem::FeedbackVertexSet => {
            // A forest has exactly (vertices - components) edges.
            let kept: Vec<usize> = (0..g.n()).filter(|&v| !inside[v]).collect();
            let edges = g.edges().iter().filter(|&&(u, v)| !inside[u] && !inside[v]).count();
            let comps = g.components_avoiding(&inside).len();
            edges + comps == kept.len()
        }
        Problem::RColoring(_) | Problem::Coloring => false,
    }
}

/// Exact optimum by a nice-decomposition DP over `td`.
pub fn solve_on_td(g: &Graph, problem: Problem, td: &TreeDecomposition) -> Result<Solution> {
    let report = td.validate(g);
    if let Some(v) = report.violations.first() {
        return Err(Error::Input(format!("invalid tree decomposition: {v:?}")));
    }
    let sol = dp::solve(g, problem, td)?;
    validate_solution(g, &sol)?;
    Ok(sol)
}

/// Exhaustive oracle. Ties go to the lexicographically smallest witness.
pub fn brute_force(g: &Graph, problem: Problem) -> Result<Solution> {
    let n = g.n();
    let sol = match problem {
        Problem::RColoring(r) => {
            guard(n, BRUTE_COLOR_MAX_N)?;
            match color_with(g, r) {
                Some(c) => exact(problem, 1, true, Witness::Coloring(c)),
                None => exact(problem, 0, false, Witness::None),
            }
        }
        Problem::Coloring => {
            guard(n, BRUTE_COLOR_MAX_N)?;
            let mut r = 0;
            loop {
                if let Some(c) = color_with(g, r) {
                    break exact(problem, r, true, Witness::Coloring(c));
                }
                r += 1;
            }
        }
        p => {
            guard(n, BRUTE_SET_MAX_N)?;
            let maximise = p == Problem::StableSet;
            let mut best: Option<Vec<usize>> = None;
            for mask in 0u64..(1u64 << n) {
                let x = VertexSet::from_mask(mask);
                let better = match &best {
                    None => true,
                    Some(b) => {
                        if maximise {
                            x.len() > b.len() || (x.len() == b.len() && x.as_slice() < b.as_slice())
                        } else {
                            x.len() < b.len() || (x.len() == b.len() && x.as_slice() < b.as_slice())
                        }
                    }
                };
                if better && is_feasible_set(g, p, &x) {
                    best = Some(x.into_vec());
                }
            }
            let b = best.expect("V or the empty set is always feasible");
            exact(p, b.len(), true, Witness::Set(VertexSet::from_vec(b)))
        }
    };
    validate_solution(g, &sol)?;
    Ok(sol)
}

fn guard(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::Guardrail(format!("brute force limited to n <= {max}, got {n}")));
    }
    Ok(())
}

fn exact(problem: Problem, value: usize, feasible: bool, witness: Witness) -> Solution {
    Solution { problem, value, feasible, witness, mode: Mode::Exact, stats: Stats::default() }
}

/// Smallest colouring in lexicographic order with colours below `r`.
fn color_with(g: &Graph, r: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut c = vec![usize::MAX; n];
    fn go(g: &Graph, r: usize, v: usize, c: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        // Colour `k` only after `0..k` are in use keeps the search small.
        let used = c[..v].iter().copied().max().map_or(0, |m| m + 1);
        for k in 0..r.min(used + 1) {
            if g.neighbors(v).iter().all(|&u| u > v || c[u] != k) {
                c[v] = k;
                if go(g, r, v + 1, c) {
                    return true;
                }
            }
        }
        c[v] = usize::MAX;
        false
    }
    go(g, r, 0, &mut c).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::search::Budget;
    use crate::treedec::treewidth_exact;

    fn both(g: &Graph, p: Problem) -> (Solution, Solution) {
        let td = treewidth_exact(g, &mut Budget::unlimited()).td;
        (solve_on_td(g, p, &td).unwrap(), brute_force(g, p).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(both(&cycle(5), Problem::StableSet).0.value, 2);
        assert_eq!(both(&cycle(6), Problem::DominatingSet).0.value, 2);
        assert!(!both(&cycle(5), Problem::RColoring(2)).0.feasible);
        assert!(both(&cycle(5), Problem::RColoring(3)).0.feasible);
        assert_eq!(both(&complete(4), Problem::FeedbackVertexSet).0.value, 2);
        let (a, b) = both(&petersen(), Problem::StableSet);
        assert_eq!((a.value, b.value), (4, 4));
        assert_eq!(brute_force(&cycle(4), Problem::VertexCover).unwrap().value, 2);
        assert_eq!(brute_force(&petersen(), Problem::Coloring).unwrap().value, 3);
        assert_eq!(brute_force(&complete_bipartite(3, 3), Problem::StableSet).unwrap().value, 3);
        let (a, b) = both(&petersen(), Problem::Coloring);
        assert_eq!((a.value, b.value), (3, 3));
    }

    #[test]
    fn all_problems_agree_on_small_graphs() {
        let graphs = [grid(3, 3), wheel(6, &[0, 2, 4]), theta([1, 2, 3]), star(4), Graph::empty(3), Graph::empty(0)];
        for g in &graphs {
            for p in Problem::ALL_SET_PROBLEMS.into_iter().chain([Problem::Coloring, Problem::RColoring(2)]) {
                let (a, b) = both(g, p);
                assert_eq!(a.value, b.value, "{p} on {g:?}");
                assert_eq!(a.feasible, b.feasible);
            }
        }
    }

    #[test]
    fn rejects_bad_witness() {
        let g = cycle(4);
        let mut s = brute_force(&g, Problem::VertexCover).unwrap();
        s.witness = Witness::Set(VertexSet::from_vec(vec![0, 1]));
        assert!(validate_solution(&g, &s).is_err());
        assert!(Problem::parse("r_coloring", None).is_err());
        assert_eq!(Problem::parse("R_COLORING", Some(3)).unwrap(), Problem::RColoring(3));
    }
}
