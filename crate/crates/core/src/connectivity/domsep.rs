//! Small sets `Y` whose closed neighbourhood is a balanced separator.

use serde::{Deserialize, Serialize};

use super::{balance_unchecked, gyarfas_path};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::search::{next_combination, Budget};
use crate::structures::{self, Certificate, Kind};
use crate::weights::{half, WeightFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomsepStrategy {
    /// Every `Y` with `|Y| <= d_max`, by size and then lexicographically.
    Exhaustive,
    /// Seeds from Gyárfás path windows, wheel centres and pyramid apices and
    /// bases, improved by swap-based local search.
    Guided,
}

/// Some `Y` with `|Y| <= d_max` and `N[Y]` a `w`-balanced separator. In
/// exhaustive mode `None` certifies that no such `Y` exists.
pub fn dominated_balanced_separator(
    g: &Graph,
    w: &WeightFunction,
    d_max: usize,
    strategy: DomsepStrategy,
) -> Result<Option<VertexSet>> {
    w.check_normal_for(g)?;
    let eval = Evaluator { g, w };
    Ok(match strategy {
        DomsepStrategy::Exhaustive => exhaustive(&eval, d_max),
        DomsepStrategy::Guided => guided(&eval, d_max),
    })
}

struct Evaluator<'a> {
    g: &'a Graph,
    w: &'a WeightFunction,
}

impl Evaluator<'_> {
    /// Raw weight of the heaviest component of `G \ N[y]`.
    fn heaviest(&self, y: &[usize]) -> i128 {
        let closed = self.g.neighborhood(&VertexSet::from_vec(y.to_vec()), true).expect("valid set");
        let v = balance_unchecked(self.g, self.w, &closed, &half());
        *v.heaviest.numer() * (self.w.denominator() / *v.heaviest.denom())
    }

    fn balanced(&self, raw: i128) -> bool {
        self.w.raw_at_most(raw, &half())
    }
}

fn exhaustive(eval: &Evaluator, d_max: usize) -> Option<VertexSet> {
    let n = eval.g.n();
    for size in 0..=d_max.min(n) {
        let mut y: Vec<usize> = (0..size).collect();
        loop {
            if eval.balanced(eval.heaviest(&y)) {
                return Some(VertexSet::from_vec(y));
            }
            if !next_combination(&mut y, n) {
                break;
            }
        }
    }
    None
}

fn seeds(eval: &Evaluator, d_max: usize) -> Vec<Vec<usize>> {
    let g = eval.g;
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    // Windows of a Gyárfás path.
    let mut budget = Budget::new(200_000);
    if g.is_connected() {
        if let Ok(p) = gyarfas_path(g, eval.w) {
            let p = p.vertices();
            for len in 1..=d_max.min(p.len()) {
                for win in p.windows(len) {
                    out.push(win.to_vec());
                }
            }
            // Evenly spaced picks along the whole path.
            if p.len() > d_max && d_max > 0 {
                out.push((0..d_max).map(|i| p[i * p.len() / d_max]).collect());
            }
        }
    }
    let hubs = structures::hubs(g, &mut budget);
    for c in &hubs.witnesses {
        if let Certificate::Wheel { center, .. } = c {
            out.push(vec![*center]);
        }
    }
    if let Some(Certificate::Pyramid { apex, base, .. }) =
        structures::find_structure(g, Kind::Pyramid, &mut budget).present()
    {
        out.push(vec![apex]);
        out.push(vec![apex, base[0]]);
        out.push(base.to_vec());
    }
    for v in 0..g.n() {
        out.push(vec![v]);
    }
    for s in &mut out {
        s.sort_unstable();
        s.dedup();
        s.truncate(d_max);
    }
    out.sort();
    out.dedup();
    out
}

fn guided(eval: &Evaluator, d_max: usize) -> Option<VertexSet> {
    let n = eval.g.n();
    let mut best: Option<Vec<usize>> = None;
    for seed in seeds(eval, d_max) {
        let mut y = seed;
        let mut score = eval.heaviest(&y);
        // Best-improvement moves: add a vertex while below d_max, or swap one.
        loop {
            if eval.balanced(score) {
                break;
            }
            let mut next: Option<(i128, Vec<usize>)> = None;
            let mut consider = |cand: Vec<usize>| {
                let s = eval.heaviest(&cand);
                if s < score && next.as_ref().is_none_or(|(b, c)| (s, &cand) < (*b, c)) {
                    next = Some((s, cand));
                }
            };
            if y.len() < d_max {
                for v in 0..n {
                    if !y.contains(&v) {
                        let mut c = y.clone();
                        c.push(v);
                        c.sort_unstable();
                        consider(c);
                    }
                }
            }
            for i in 0..y.len() {
                for v in 0..n {
                    if !y.contains(&v) {
                        let mut c = y.clone();
                        c[i] = v;
                        c.sort_unstable();
                        consider(c);
                    }
                }
            }
            match next {
                Some((s, c)) => {
                    y = c;
                    score = s;
                }
                None => break,
            }
        }
        if eval.balanced(score) && best.as_ref().is_none_or(|b| (y.len(), &y) < (b.len(), b)) {
            best = Some(y);
        }
    }
    best.map(VertexSet::from_vec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn universal_vertex() {
        let g = star(5);
        let w = WeightFunction::uniform(6).unwrap();
        let y = dominated_balanced_separator(&g, &w, 1, DomsepStrategy::Exhaustive).unwrap().unwrap();
        assert_eq!(y.as_slice(), &[0]);
    }

    #[test]
    fn c12_needs_two() {
        let g = cycle(12);
        let w = WeightFunction::uniform(12).unwrap();
        assert!(dominated_balanced_separator(&g, &w, 1, DomsepStrategy::Exhaustive).unwrap().is_none());
        for s in [DomsepStrategy::Exhaustive, DomsepStrategy::Guided] {
            let y = dominated_balanced_separator(&g, &w, 2, s).unwrap().unwrap();
            assert_eq!(y.len(), 2);
            let closed = g.neighborhood(&y, true).unwrap();
            assert!(super::super::is_balanced_separator(&g, &w, &closed, &half()).unwrap().balanced);
        }
    }
}
