//! Tree decompositions from a balanced-separator oracle.
//!
//! With `m = ceil(k / (1 - c))`, a part `C` with boundary `S = N(C)`,
//! `|S| <= m`, is handled as follows. Pad `S` with the smallest vertices of
//! `C` to a set `S'` of size `m`, let `v` be the smallest vertex of `C \ S'`
//! and ask the oracle for a separator `X` of the weighting that puts
//! `(m+1) / (m(m+2))` on each vertex of `S'` and `1 / (m+2)` on `v`. The bag
//! is `S' ∪ (X ∩ C)` and each component `D` of `C` minus the bag recurses
//! with boundary `N(D)`. Balance forces `|N(D)| <= m` and `X ∩ C ≠ ∅`, so
//! bags never exceed `m + k`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::TreeDecomposition;
use crate::connectivity::is_balanced_separator;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::weights::{Rational, WeightFunction};

#[derive(Clone, Debug, Serialize)]
pub struct OracleCall {
    pub weights: WeightFunction,
    pub separator: VertexSet,
    #[serde(serialize_with = "crate::weights::serialize_rational")]
    pub heaviest: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancedTd {
    pub td: TreeDecomposition,
    /// `ceil(k / (1 - c))`.
    pub m: usize,
    /// `m - 1 + k`.
    pub width_bound: usize,
    pub calls: Vec<OracleCall>,
}

pub fn td_from_balanced_separators(
    g: &Graph,
    oracle: &mut dyn FnMut(&WeightFunction) -> VertexSet,
    c: &Rational,
    k: usize,
) -> Result<BalancedTd> {
    if *c < Rational::zero() || *c >= Rational::one() {
        return Err(Error::Input(format!("balance constant {c} outside [0, 1)")));
    }
    let kk = Rational::from_integer(k as i128);
    let m = (kk / (Rational::one() - c)).ceil().to_integer() as usize;
    let mut b = Builder { g, oracle, c: *c, k, m, bags: Vec::new(), edges: Vec::new(), calls: Vec::new() };
    let mut prev = None;
    for comp in g.components(&VertexSet::new()) {
        let root = b.part(&comp, &VertexSet::new())?;
        if let Some(p) = prev {
            b.edges.push((p, root));
        }
        prev = Some(root);
    }
    let td = if b.bags.is_empty() {
        TreeDecomposition::single_bag(VertexSet::new())
    } else {
        TreeDecomposition::new(b.bags, b.edges)?
    };
    Ok(BalancedTd { td, m, width_bound: (m + k).saturating_sub(1), calls: b.calls })
}

struct Builder<'a, 'o> {
    g: &'a Graph,
    oracle: &'o mut dyn FnMut(&WeightFunction) -> VertexSet,
    c: Rational,
    k: usize,
    m: usize,
    bags: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    calls: Vec<OracleCall>,
}

impl Builder<'_, '_> {
    /// Decomposes `G[C ∪ S]` with `S` inside the returned root bag.
    fn part(&mut self, c: &VertexSet, s: &VertexSet) -> Result<usize> {
        let (m, k) = (self.m, self.k);
        let me = self.bags.len();
        let whole = c.union(s);
        if whole.len() <= m + k {
            self.bags.push(whole);
            return Ok(me);
        }
        let mut padded = s.clone();
        for v in c {
            if padded.len() >= m {
                break;
            }
            padded.insert(v);
        }
        let v = c.iter().find(|&v| !padded.contains(v)).expect("|C ∪ S| > m + k leaves a vertex");
        let mm = m as i128;
        let heavy = Rational::new(mm + 1, mm * (mm + 2));
        let light = Rational::new(1, mm + 2);
        let mut ws = vec![Rational::zero(); self.g.n()];
        for u in &padded {
            ws[u] = heavy;
        }
        ws[v] = light;
        let w = WeightFunction::from_ratios(&ws)?;
        let call = self.calls.len();
        let x = (self.oracle)(&w);
        let bad = |msg: String| Error::Oracle { call, msg };
        self.g.check_set(&x).map_err(|e| bad(e.to_string()))?;
        if x.len() > k {
            return Err(bad(format!("separator {x} has {} > {k} vertices", x.len())));
        }
        let verdict = is_balanced_separator(self.g, &w, &x, &self.c)?;
        self.calls.push(OracleCall { weights: w, separator: x.clone(), heaviest: verdict.heaviest });
        if !verdict.balanced {
            return Err(bad(format!("separator {x} leaves a component of weight {}", verdict.heaviest)));
        }
        let inside = x.intersection(c);
        if inside.is_empty() {
            return Err(bad(format!("separator {x} misses the current part")));
        }
        let bag = padded.union(&inside);
        self.bags.push(bag.clone());
        let mut blocked = vec![true; self.g.n()];
        for u in &c.difference(&bag) {
            blocked[u] = false;
        }
        for d in self.g.components_avoiding(&blocked) {
            let nd = self.g.neighborhood(&d, false)?;
            debug_assert!(nd.is_subset(&bag) && nd.len() <= m);
            let child = self.part(&d, &nd)?;
            self.edges.push((me, child));
        }
        Ok(me)
    }
}
