//! Layered partitions of the hubs into stable sets with bounded forward
//! degree, and the smallest number of layers (hub dimension).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{mask_iter, Graph, VertexSet};
use crate::search::Budget;
use crate::structures::hubs;

/// Exhaustive hub dimension is limited to this many hubs.
pub const HDIM_MAX_HUBS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HubPartition {
    pub layers: Vec<VertexSet>,
    /// Largest number of neighbours a vertex of `S_i` has in `S_i ∪ … ∪ S_k`.
    pub d: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    /// Same maximum but counting neighbours in all of `G` minus earlier
    /// layers, the measure used for partitions of the whole vertex set.
    pub d_graph: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HdimSearch {
    Greedy,
    Exhaustive,
}

/// Greedy layering of `set`: each layer is a maximal stable set among the
/// vertices whose degree inside the remaining part is at most `d`,
/// preferring low degree and then low id. `None` if it gets stuck.
pub fn greedy_layers(g: &Graph, set: &VertexSet, d: usize) -> Option<Vec<VertexSet>> {
    let mut rest = set.clone();
    let mut layers = Vec::new();
    while !rest.is_empty() {
        let deg = |v: usize, r: &VertexSet| g.neighbors(v).iter().filter(|&&u| r.contains(u)).count();
        let mut cands: Vec<(usize, usize)> = rest.iter().map(|v| (deg(v, &rest), v)).filter(|&(dv, _)| dv <= d).collect();
        if cands.is_empty() {
            return None;
        }
        cands.sort_unstable();
        let mut layer = VertexSet::new();
        for (_, v) in cands {
            if g.neighbors(v).iter().all(|&u| !layer.contains(u)) {
                layer.insert(v);
            }
        }
        rest = rest.difference(&layer);
        layers.push(layer);
    }
    Some(layers)
}

/// Greedy layering with the smallest `d` for which the greedy succeeds.
/// The degeneracy of `G[set]` always works.
pub fn partition_set(g: &Graph, set: &VertexSet, a: usize, b: usize) -> HubPartition {
    let layers = (0..=set.len())
        .find_map(|d| greedy_layers(g, set, d))
        .expect("the degeneracy bound always admits a layering");
    let p = HubPartition { k: layers.len(), d: 0, d_graph: 0, a, b, layers };
    let (d, d_graph) = degrees(g, &p.layers);
    HubPartition { d, d_graph, ..p }
}

fn degrees(g: &Graph, layers: &[VertexSet]) -> (usize, usize) {
    let mut later: VertexSet = layers.iter().fold(VertexSet::new(), |acc, l| acc.union(l));
    let mut gone = vec![false; g.n()];
    let (mut d, mut dg) = (0, 0);
    for layer in layers {
        for v in layer {
            d = d.max(g.neighbors(v).iter().filter(|&&u| later.contains(u)).count());
            dg = dg.max(g.neighbors(v).iter().filter(|&&u| !gone[u]).count());
        }
        for v in layer {
            gone[v] = true;
        }
        later = later.difference(layer);
    }
    (d, dg)
}

/// Hub partition of `Hub(G) \ {a, b}` given the hub set.
pub fn hub_partition(g: &Graph, a: usize, b: usize, hub_set: &VertexSet) -> Result<HubPartition> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.check_set(hub_set)?;
    if a == b {
        return Err(Error::Input("a and b must differ".into()));
    }
    let mut set = hub_set.clone();
    set.remove(a);
    set.remove(b);
    let p = partition_set(g, &set, a, b);
    check_partition(g, &p, &set)?;
    Ok(p)
}

/// The three invariants: layers stable, forward degree at most `d`, and
/// the layers partition `set`.
pub fn check_partition(g: &Graph, p: &HubPartition, set: &VertexSet) -> Result<()> {
    let bad = |m: String| Err(Error::Precondition(format!("hub partition invalid: {m}")));
    let mut seen = VertexSet::new();
    for (i, l) in p.layers.iter().enumerate() {
        if l.is_empty() {
            return bad(format!("layer {i} is empty"));
        }
        if !g.is_stable(l.as_slice()) {
            return bad(format!("layer {i} = {l} is not stable"));
        }
        if !seen.is_disjoint(l) {
            return bad(format!("layer {i} overlaps earlier layers"));
        }
        seen = seen.union(l);
    }
    if seen != *set {
        return bad(format!("layers cover {seen}, expected {set}"));
    }
    if p.k != p.layers.len() {
        return bad("k differs from the number of layers".into());
    }
    if degrees(g, &p.layers).0 > p.d {
        return bad(format!("forward degree exceeds d = {}", p.d));
    }
    Ok(())
}

/// Fewest layers over all partitions of `set` into stable sets whose
/// vertices have at most `d` neighbours in their own and later layers.
/// `None` if no such partition exists.
pub fn min_layers(g: &Graph, set: &VertexSet, d: usize) -> Result<Option<usize>> {
    if set.len() > HDIM_MAX_HUBS {
        return Err(Error::Guardrail(format!("exhaustive hub dimension limited to {HDIM_MAX_HUBS} hubs, got {}", set.len())));
    }
    let verts = set.as_slice();
    let h = verts.len();
    let adj: Vec<u32> = verts
        .iter()
        .map(|&v| (0..h).filter(|&j| g.has_edge(v, verts[j])).fold(0u32, |m, j| m | 1 << j))
        .collect();
    // best[r] = fewest layers for the remaining mask r.
    let full = (1u32 << h) - 1;
    let mut best = vec![u8::MAX; 1 << h];
    best[0] = 0;
    for r in 1..=full {
        let ok: u32 = mask_iter(r as u64)
            .filter(|&i| (adj[i] & r).count_ones() as usize <= d)
            .fold(0, |m, i| m | 1 << i);
        let mut s = ok;
        while s != 0 {
            let stable = mask_iter(s as u64).all(|i| adj[i] & s == 0);
            if stable && best[(r & !s) as usize] != u8::MAX {
                best[r as usize] = best[r as usize].min(best[(r & !s) as usize] + 1);
            }
            s = (s - 1) & ok;
        }
    }
    Ok((best[full as usize] != u8::MAX).then(|| best[full as usize] as usize))
}

#[derive(Clone, Debug, Serialize)]
pub struct HubDimension {
    pub k: usize,
    pub d: usize,
    pub search: HdimSearch,
    pub hubs: VertexSet,
    /// Hub enumeration finished within the budget.
    pub hubs_complete: bool,
}

/// Hub dimension of `(G, ab)` for a single global `d`. When `d` is `None`
/// the greedy partition's realised `d` is used.
pub fn hub_dimension(g: &Graph, a: usize, b: usize, search: HdimSearch, d: Option<usize>, budget: &mut Budget) -> Result<HubDimension> {
    let report = hubs(g, budget);
    if !report.complete {
        return Err(Error::Guardrail("hub enumeration ran out of budget".into()));
    }
    let greedy = hub_partition(g, a, b, &report.hubs)?;
    let mut set = report.hubs.clone();
    set.remove(a);
    set.remove(b);
    let d = d.unwrap_or(greedy.d);
    let k = match search {
        HdimSearch::Greedy => {
            greedy_layers(g, &set, d).ok_or_else(|| Error::Precondition(format!("greedy finds no layering with d = {d}")))?.len()
        }
        HdimSearch::Exhaustive => {
            min_layers(g, &set, d)?.ok_or_else(|| Error::Precondition(format!("no hub partition with d = {d}")))?
        }
    };
    Ok(HubDimension { k, d, search, hubs: report.hubs, hubs_complete: report.complete })
}
