//! Measurement pipelines: treewidth against log n, and the largest banana
//! against log n. Reports only; nothing here asserts a constant.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use ehf_core::connectivity::{dominated_balanced_separator, max_banana, DomsepStrategy};
use ehf_core::treedec::treewidth_exact;
use ehf_core::{Budget, Result, WeightFunction};

use crate::generators::{generate, Family, GeneratorSpec};

pub const CAVEAT: &str = "constants non-effective in source; measured values only, no bound is asserted";

/// Largest `d` tried when looking for a dominated balanced separator.
const DOMSEP_D_MAX: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub n: usize,
    pub seed: u64,
    pub verdict: String,
    pub clique_number: usize,
    pub tw_lower: usize,
    pub tw_upper: usize,
    pub tw_exact: bool,
    /// For chordal inputs: whether treewidth equals clique number minus one.
    pub chordal_anchor: Option<bool>,
    /// Largest banana over the sampled nonadjacent pairs.
    pub max_banana: Option<usize>,
    pub pairs_sampled: usize,
    /// Smallest `d` with `N[Y]`, `|Y| <= d`, a balanced separator for
    /// uniform weights (searched up to a small cap).
    pub domsep_d: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurvePoint {
    pub n: usize,
    pub log2_n: f64,
    pub instances: usize,
    pub mean: f64,
    pub min: usize,
    pub max: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fit {
    /// Least-squares slope of the measured value against log2 n.
    pub slope: f64,
    pub intercept: f64,
    /// Half-width of an approximate 95% interval for the slope.
    pub slope_ci95: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub family: Family,
    pub n_list: Vec<usize>,
    pub seeds: Vec<u64>,
    pub records: Vec<InstanceRecord>,
    pub curve: Vec<CurvePoint>,
    pub fit: Option<Fit>,
    pub chordal_anchor_failures: usize,
    pub caveat: &'static str,
}

/// Per-instance wall-clock times, kept apart from the report so that the
/// report itself is reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct Timings {
    pub instance_ms: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Treewidth,
    Banana { pairs: usize },
}

pub fn run_experiment(
    measure: Measure,
    family: Family,
    n_list: &[usize],
    seeds: &[u64],
    budget: u64,
) -> Result<(ExperimentReport, Timings)> {
    let jobs: Vec<(usize, u64)> = n_list.iter().flat_map(|&n| seeds.iter().map(move |&s| (n, s))).collect();
    let results: Vec<Result<(InstanceRecord, f64)>> =
        jobs.par_iter().map(|&(n, seed)| instance(measure, family, n, seed, budget)).collect();
    let mut records = Vec::new();
    let mut instance_ms = Vec::new();
    for r in results {
        let (rec, ms) = r?;
        records.push(rec);
        instance_ms.push(ms);
    }
    let value = |r: &InstanceRecord| match measure {
        Measure::Treewidth => r.tw_upper,
        Measure::Banana { .. } => r.max_banana.unwrap_or(0),
    };
    let mut curve = Vec::new();
    for &n in n_list {
        let vals: Vec<usize> = records.iter().filter(|r| r.n == n).map(value).collect();
        if vals.is_empty() || curve.iter().any(|c: &CurvePoint| c.n == n) {
            continue;
        }
        curve.push(CurvePoint {
            n,
            log2_n: (n.max(1) as f64).log2(),
            instances: vals.len(),
            mean: vals.iter().sum::<usize>() as f64 / vals.len() as f64,
            min: *vals.iter().min().unwrap(),
            max: *vals.iter().max().unwrap(),
        });
    }
    let points: Vec<(f64, f64)> = records.iter().map(|r| ((r.n.max(1) as f64).log2(), value(r) as f64)).collect();
    let report = ExperimentReport {
        experiment: match measure {
            Measure::Treewidth => "logtw".into(),
            Measure::Banana { .. } => "banana".into(),
        },
        family,
        n_list: n_list.to_vec(),
        seeds: seeds.to_vec(),
        chordal_anchor_failures: records.iter().filter(|r| r.chordal_anchor == Some(false)).count(),
        records,
        curve,
        fit: fit(&points),
        caveat: CAVEAT,
    };
    Ok((report, Timings { instance_ms }))
}

fn instance(measure: Measure, family: Family, n: usize, seed: u64, budget: u64) -> Result<(InstanceRecord, f64)> {
    let start = Instant::now();
    let gen = generate(&GeneratorSpec::new(family, n, seed))?;
    let g = &gen.graph;
    let clique = g.clique_number(budget).size;
    let tw = treewidth_exact(g, &mut Budget::new(budget));
    let chordal_anchor = (family == Family::ChordalRandom).then(|| tw.exact && tw.upper + 1 == clique.max(1));
    let (max_banana, pairs_sampled) = match measure {
        Measure::Banana { pairs } => {
            let mut all: Vec<(usize, usize)> =
                (0..g.n()).flat_map(|a| (a + 1..g.n()).map(move |b| (a, b))).filter(|&(a, b)| !g.has_edge(a, b)).collect();
            if all.len() > pairs {
                all.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9));
                all.truncate(pairs);
                all.sort_unstable();
            }
            let mut best = 0;
            for &(a, b) in &all {
                best = best.max(max_banana(g, a, b)?.k);
            }
            (Some(best), all.len())
        }
        Measure::Treewidth => (None, 0),
    };
    let domsep_d = if g.n() == 0 {
        Some(0)
    } else {
        let w = WeightFunction::uniform(g.n())?;
        let mut found = None;
        for d in 0..=DOMSEP_D_MAX {
            if dominated_balanced_separator(g, &w, d, DomsepStrategy::Exhaustive)?.is_some() {
                found = Some(d);
                break;
            }
        }
        found
    };
    let rec = InstanceRecord {
        n,
        seed,
        verdict: gen.verdict,
        clique_number: clique,
        tw_lower: tw.lower,
        tw_upper: tw.upper,
        tw_exact: tw.exact,
        chordal_anchor,
        max_banana,
        pairs_sampled,
        domsep_d,
    };
    Ok((rec, start.elapsed().as_secs_f64() * 1000.0))
}

/// Ordinary least squares `y = slope * x + intercept`.
pub fn fit(points: &[(f64, f64)]) -> Option<Fit> {
    let k = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let resid: f64 = points.iter().map(|p| (p.1 - slope * p.0 - intercept).powi(2)).sum();
    let se = if points.len() > 2 { (resid / (k - 2.0) / sxx).sqrt() } else { 0.0 };
    Some(Fit { slope, intercept, slope_ci95: 1.96 * se })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_are_flat() {
        let (r, _) = run_experiment(Measure::Treewidth, Family::Cycles, &[5, 8, 11], &[0, 1], 1 << 26).unwrap();
        assert!(r.records.iter().all(|x| x.tw_upper == 2 && x.tw_exact));
        assert!(r.fit.unwrap().slope.abs() < 1e-9);
        let (r, _) = run_experiment(Measure::Banana { pairs: 10 }, Family::Cycles, &[6, 9], &[0], 1 << 26).unwrap();
        assert!(r.records.iter().all(|x| x.max_banana == Some(2)));
    }

    #[test]
    fn chordal_anchor() {
        let (r, _) = run_experiment(Measure::Treewidth, Family::ChordalRandom, &[6, 12], &[0, 1, 2], 1 << 26).unwrap();
        assert_eq!(r.chordal_anchor_failures, 0);
    }

    #[test]
    fn fit_line() {
        let f = fit(&[(1.0, 3.0), (2.0, 5.0), (3.0, 7.0)]).unwrap();
        assert!((f.slope - 2.0).abs() < 1e-12 && (f.intercept - 1.0).abs() < 1e-12);
    }
}
