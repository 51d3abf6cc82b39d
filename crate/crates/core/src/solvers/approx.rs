//! Clique-stripping PTAS for vertex cover and the separator-guessing QPTAS
//! for stable set.

use std::collections::HashMap;

use num_traits::{One, ToPrimitive, Zero};

use super::{solve_on_td, validate_solution, Mode, Problem, Solution, Stats, Witness};
use crate::error::{Error, Result};
use crate::graph::{mask_iter, Graph, VertexSet};
use crate::search::{next_combination, Budget};
use crate::treedec::{min_fill_order, td_from_elimination, treewidth_exact};
use crate::weights::Rational;

/// Largest graph the QPTAS accepts without `force`.
pub const QPTAS_MAX_N: usize = 30;

fn check_eps(eps: &Rational) -> Result<()> {
    if *eps <= Rational::zero() || *eps > Rational::one() {
        return Err(Error::Input(format!("epsilon {eps} outside (0, 1]")));
    }
    Ok(())
}

/// Exact vertex cover of `g` through a decomposition of `g`.
fn exact_cover(g: &Graph, budget: &mut Budget) -> Result<(VertexSet, Stats)> {
    let tw = treewidth_exact(g, budget);
    let td = if tw.exact { tw.td } else { td_from_elimination(g, &min_fill_order(g)) };
    let s = solve_on_td(g, Problem::VertexCover, &td)?;
    match s.witness {
        Witness::Set(x) => Ok((x, s.stats)),
        _ => unreachable!("vertex cover yields a set"),
    }
}

/// Repeatedly removes a clique of `ceil(2/eps)` vertices, putting it in the
/// cover, and solves the clique-free rest exactly. A clique of size `q`
/// needs `q - 1` cover vertices, so each step loses at most a factor
/// `q / (q - 1) <= 1 + eps`.
pub fn ptas_vertex_cover(g: &Graph, eps: &Rational, budget: &mut Budget) -> Result<Solution> {
    check_eps(eps)?;
    let q = (Rational::from_integer(2) / eps).ceil().to_integer() as usize;
    let mut alive = VertexSet::range(g.n());
    let mut cover = VertexSet::new();
    let mut cliques = 0;
    loop {
        let (h, map) = g.induced_subgraph(&alive)?;
        let back: Vec<usize> = (0..g.n()).filter(|&v| map[v].is_some()).collect();
        match h.find_clique_of_size(q) {
            Some(c) => {
                cliques += 1;
                for v in c {
                    cover.insert(back[v]);
                    alive.remove(back[v]);
                }
            }
            None => {
                let (rest, mut stats) = exact_cover(&h, budget)?;
                for v in &rest {
                    cover.insert(back[v]);
                }
                stats.cliques_removed = cliques;
                let sol = Solution {
                    problem: Problem::VertexCover,
                    value: cover.len(),
                    feasible: true,
                    witness: Witness::Set(cover),
                    mode: Mode::UpperApprox { eps: eps.to_string() },
                    stats,
                };
                validate_solution(g, &sol)?;
                return Ok(sol);
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct QptasOptions {
    pub eps: Rational,
    /// Size bound on the dominated part `Y` of each balanced separator.
    pub d: usize,
    /// Vertex count the accuracy is measured against; `None` means `|V|`.
    pub initial_n: Option<usize>,
    /// Refuse to run beyond `QPTAS_MAX_N` unless set.
    pub force: bool,
    /// Search nodes allowed before giving up with a guardrail error.
    pub budget: u64,
}

impl QptasOptions {
    pub fn new(eps: Rational, d: usize) -> Self {
        QptasOptions { eps, d, initial_n: None, force: false, budget: 200_000_000 }
    }
}

/// Recursion `(G, N)`: a single vertex is returned, components are solved
/// separately, otherwise every stable `S` up to `2 d log n log N / eps`
/// and every `Y` up to `d` with all components of `G - (N(S) ∪ N[Y])` of
/// at most `|V|/2` vertices is tried and the largest result kept.
///
/// Subproblems are memoised by vertex set. A pair whose result already
/// reaches `α` of the current graph cannot be beaten, so the scan stops
/// there; the value is the same as a full scan.
pub fn qptas_stable_set(g: &Graph, opts: &QptasOptions) -> Result<Solution> {
    check_eps(&opts.eps)?;
    let n = g.n();
    if n > 63 || (n > QPTAS_MAX_N && !opts.force) {
        return Err(Error::Guardrail(format!("QPTAS limited to n <= {QPTAS_MAX_N}, got {n}")));
    }
    let big_n = opts.initial_n.unwrap_or(n).max(n).max(1);
    let mut q = Qptas {
        g,
        eps: opts.eps.to_f64().unwrap_or(1.0),
        d: opts.d,
        log_big_n: (big_n as f64).log2(),
        memo: HashMap::new(),
        alpha: HashMap::new(),
        budget: Budget::new(opts.budget),
        calls: 0,
        fallback: false,
    };
    let best = q.solve(g.full_mask())?;
    let set = VertexSet::from_mask(best);
    let sol = Solution {
        problem: Problem::StableSet,
        value: set.len(),
        feasible: true,
        witness: Witness::Set(set),
        mode: Mode::LowerApprox { eps: opts.eps.to_string() },
        stats: Stats { qptas_calls: q.calls, fallback: q.fallback, ..Stats::default() },
    };
    validate_solution(g, &sol)?;
    Ok(sol)
}

struct Qptas<'a> {
    g: &'a Graph,
    eps: f64,
    d: usize,
    log_big_n: f64,
    memo: HashMap<u64, u64>,
    alpha: HashMap<u64, u64>,
    budget: Budget,
    calls: usize,
    fallback: bool,
}

impl Qptas<'_> {
    fn tick(&mut self) -> Result<()> {
        if self.budget.tick() {
            Ok(())
        } else {
            Err(Error::Guardrail(format!("QPTAS search budget of {} exhausted", self.budget.limit())))
        }
    }

    fn open_nbhd(&self, set: u64, within: u64) -> u64 {
        let mut out = 0;
        for v in mask_iter(set) {
            out |= self.g.nbr_mask(v);
        }
        out & within & !set
    }

    fn solve(&mut self, mask: u64) -> Result<u64> {
        if mask.count_ones() <= 1 {
            return Ok(mask);
        }
        if let Some(&r) = self.memo.get(&mask) {
            return Ok(r);
        }
        self.calls += 1;
        let comps = self.g.components_mask(mask);
        let result = if comps.len() > 1 {
            let mut acc = 0;
            for c in comps {
                acc |= self.solve(c)?;
            }
            acc
        } else {
            self.connected(mask)?
        };
        self.memo.insert(mask, result);
        Ok(result)
    }

    fn connected(&mut self, mask: u64) -> Result<u64> {
        let verts: Vec<usize> = mask_iter(mask).collect();
        let size = verts.len();
        let target = self.max_stable(mask);
        let s_max = ((2.0 * self.d as f64 * (size as f64).log2() * self.log_big_n / self.eps).floor() as usize).min(size);
        let y_max = self.d.min(size);
        let mut best: Option<u64> = None;
        for s_size in 0..=s_max {
            let mut sc: Vec<usize> = (0..s_size).collect();
            loop {
                let s: u64 = sc.iter().fold(0, |m, &i| m | 1 << verts[i]);
                if self.g.is_stable(&sc.iter().map(|&i| verts[i]).collect::<Vec<_>>()) {
                    let ns = self.open_nbhd(s, mask);
                    for y_size in 0..=y_max {
                        let mut yc: Vec<usize> = (0..y_size).collect();
                        loop {
                            self.tick()?;
                            let y: u64 = yc.iter().fold(0, |m, &i| m | 1 << verts[i]);
                            let rest = mask & !(ns | y | self.open_nbhd(y, mask));
                            if self.g.components_mask(rest).iter().all(|c| 2 * c.count_ones() as usize <= size) {
                                let r = self.solve(rest)?;
                                if best.is_none_or(|b| r.count_ones() > b.count_ones()) {
                                    best = Some(r);
                                    if r.count_ones() == target.count_ones() {
                                        return Ok(r);
                                    }
                                }
                            }
                            if !next_combination(&mut yc, size) {
                                break;
                            }
                        }
                    }
                }
                if !next_combination(&mut sc, size) {
                    break;
                }
            }
        }
        Ok(match best {
            Some(b) => b,
            None => {
                self.fallback = true;
                target
            }
        })
    }

    /// A maximum stable set inside `mask`, lexicographically first among
    /// the ones the branching finds.
    fn max_stable(&mut self, mask: u64) -> u64 {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = self.alpha.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let nv = self.g.nbr_mask(v) & mask;
        let with = self.max_stable(mask & !nv & !(1 << v)) | 1 << v;
        let r = if nv == 0 {
            with
        } else {
            let without = self.max_stable(mask & !(1 << v));
            if without.count_ones() > with.count_ones() {
                without
            } else {
                with
            }
        };
        self.alpha.insert(mask, r);
        r
    }
}
