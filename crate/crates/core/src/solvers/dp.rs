//! Nice tree decompositions with introduce-edge nodes and a generic
//! bottom-up table DP over them.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Mode, Problem, Solution, Stats, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::treedec::TreeDecomposition;

/// Table entries above this abort the DP.
const MAX_TABLE: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    IntroduceEdge(usize, usize),
    Join,
}

#[derive(Clone, Debug, Serialize)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nice decomposition whose last node is the root with an empty bag.
/// Children always precede parents. Every edge of `g` is introduced
/// exactly once, right before its first endpoint is forgotten.
pub fn nice_decomposition(g: &Graph, td: &TreeDecomposition) -> Vec<NiceNode> {
    let mut b = NiceBuilder { g, td, nodes: Vec::new() };
    let top = b.build(0, usize::MAX);
    let root_bag = td.bag(0).as_slice().to_vec();
    b.forget_all(top, root_bag, &[]);
    b.nodes
}

struct NiceBuilder<'a> {
    g: &'a Graph,
    td: &'a TreeDecomposition,
    nodes: Vec<NiceNode>,
}

impl NiceBuilder<'_> {
    fn push(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Returns a node whose bag equals the bag of `t`.
    fn build(&mut self, t: usize, parent: usize) -> usize {
        let target = self.td.bag(t).as_slice().to_vec();
        let kids: Vec<usize> = self.td.tree_neighbors(t).iter().copied().filter(|&c| c != parent).collect();
        let mut branches = Vec::new();
        for c in kids {
            let sub = self.build(c, t);
            let cb = self.td.bag(c).as_slice().to_vec();
            let mid = self.forget_all(sub, cb, &target);
            branches.push(self.introduce_all(mid, &target));
        }
        if branches.is_empty() {
            let leaf = self.push(NiceKind::Leaf, Vec::new(), Vec::new());
            branches.push(self.introduce_all(leaf, &target));
        }
        let mut cur = branches[0];
        for &other in &branches[1..] {
            cur = self.push(NiceKind::Join, target.clone(), vec![cur, other]);
        }
        cur
    }

    /// Forgets the vertices of `bag` missing from `keep`, introducing
    /// their remaining edges first.
    fn forget_all(&mut self, mut cur: usize, mut bag: Vec<usize>, keep: &[usize]) -> usize {
        let drop: Vec<usize> = bag.iter().copied().filter(|v| keep.binary_search(v).is_err()).collect();
        for v in drop {
            for &x in bag.clone().iter() {
                if x != v && self.g.has_edge(v, x) {
                    cur = self.push(NiceKind::IntroduceEdge(v, x), bag.clone(), vec![cur]);
                }
            }
            bag.retain(|&x| x != v);
            cur = self.push(NiceKind::Forget(v), bag.clone(), vec![cur]);
        }
        cur
    }

    fn introduce_all(&mut self, mut cur: usize, target: &[usize]) -> usize {
        let mut bag = self.nodes[cur].bag.clone();
        for &v in target {
            if let Err(pos) = bag.binary_search(&v) {
                bag.insert(pos, v);
                cur = self.push(NiceKind::Introduce(v), bag.clone(), vec![cur]);
            }
        }
        cur
    }
}

type State = Vec<u8>;
type Table = BTreeMap<State, i64>;

/// One problem as transitions on per-vertex states, minimising cost.
trait Spec {
    fn introduce(&self, s: &[u8], pos: usize) -> Vec<(State, i64)>;
    fn forget(&self, s: &[u8], pos: usize) -> Option<State>;
    fn edge(&self, s: &[u8], pu: usize, pv: usize) -> Vec<State>;
    fn join_key(&self, s: &[u8]) -> State;
    /// Combined state and the correction added to the summed costs.
    fn join(&self, a: &[u8], b: &[u8]) -> Option<(State, i64)>;
}

fn inserted(s: &[u8], pos: usize, x: u8) -> State {
    let mut t = s.to_vec();
    t.insert(pos, x);
    t
}

fn removed(s: &[u8], pos: usize) -> State {
    let mut t = s.to_vec();
    t.remove(pos);
    t
}

struct Stable;

impl Spec for Stable {
    fn introduce(&self, s: &[u8], pos: usize) -> Vec<(State, i64)> {
        vec![(inserted(s, pos, 0), 0), (inserted(s, pos, 1), -1)]
    }
    fn forget(&self, s: &[u8], pos: usize) -> Option<State> {
        Some(removed(s, pos))
    }
    fn edge(&self, s: &[u8], pu: usize, pv: usize) -> Vec<State> {
        if s[pu] == 1 && s[pv] == 1 {
            Vec::new()
        } else {
            vec![s.to_vec()]
        }
    }
    fn join_key(&self, s: &[u8]) -> State {
        s.to_vec()
    }
    fn join(&self, a: &[u8], _: &[u8]) -> Option<(State, i64)> {
        Some((a.to_vec(), a.iter().filter(|&&x| x == 1).count() as i64))
    }
}

// 0: in D, 1: already dominated, 2: not yet dominated (fine either way).
struct Dominating;

impl Spec for Dominating {
    fn introduce(&self, s: &[u8], pos: usize) -> Vec<(State, i64)> {
        vec![(inserted(s, pos, 0), 1), (inserted(s, pos, 2), 0)]
    }
    fn forget(&self, s: &[u8], pos: usize) -> Option<State> {
        (s[pos] != 2).then(|| removed(s, pos))
    }
    fn edge(&self, s: &[u8], pu: usize, pv: usize) -> Vec<State> {
        let mut out = vec![s.to_vec()];
        for (a, b) in [(pu, pv), (pv, pu)] {
            if s[a] == 0 && s[b] == 2 {
                let mut t = s.to_vec();
                t[b] = 1;
                out.push(t);
            }
        }
        out
    }
    fn join_key(&self, s: &[u8]) -> State {
        s.iter().map(|&x| u8::from(x == 0)).collect()
    }
    fn join(&self, a: &[u8], b: &[u8]) -> Option<(State, i64)> {
        let s: State = a.iter().zip(b).map(|(&x, &y)| if x == 0 { 0 } else if x == 1 || y == 1 { 1 } else { 2 }).collect();
        let adj = -(a.iter().filter(|&&x| x == 0).count() as i64);
        Some((s, adj))
    }
}

// 0: deleted, otherwise a label of the forest component, canonical by
// first appearance.
struct Forest;

fn canonical(s: &mut [u8]) {
    let mut map = [0u8; 256];
    let mut next = 0u8;
    for x in s.iter_mut() {
        if *x != 0 {
            if map[*x as usize] == 0 {
                next += 1;
                map[*x as usize] = next;
            }
            *x = map[*x as usize];
        }
    }
}

impl Spec for Forest {
    fn introduce(&self, s: &[u8], pos: usize) -> Vec<(State, i64)> {
        let fresh = s.iter().copied().max().unwrap_or(0) + 1;
        let mut kept = inserted(s, pos, fresh);
        canonical(&mut kept);
        vec![(inserted(s, pos, 0), 1), (kept, 0)]
    }
    fn forget(&self, s: &[u8], pos: usize) -> Option<State> {
        let mut t = removed(s, pos);
        canonical(&mut t);
        Some(t)
    }
    fn edge(&self, s: &[u8], pu: usize, pv: usize) -> Vec<State> {
        let (a, b) = (s[pu], s[pv]);
        if a == 0 || b == 0 {
            return vec![s.to_vec()];
        }
        if a == b {
            return Vec::new();
        }
        let mut t: State = s.iter().map(|&x| if x == b { a } else { x }).collect();
        canonical(&mut t);
        vec![t]
    }
    fn join_key(&self, s: &[u8]) -> State {
        s.iter().map(|&x| u8::from(x == 0)).collect()
    }
    fn join(&self, a: &[u8], b: &[u8]) -> Option<(State, i64)> {
        // Union-find over labels of `a`; each pair of positions sharing a
        // label in `b` is a path through the other side.
        let mut parent: Vec<u8> = (0..=a.len() as u8).collect();
        fn find(p: &mut [u8], x: u8) -> u8 {
            let mut r = x;
            while p[r as usize] != r {
                r = p[r as usize];
            }
            p[x as usize] = r;
            r
        }
        let mut first: BTreeMap<u8, usize> = BTreeMap::new();
        for (i, &y) in b.iter().enumerate() {
            if y == 0 {
                continue;
            }
            match first.get(&y) {
                None => {
                    first.insert(y, i);
                }
                Some(&j) => {
                    let (ra, rb) = (find(&mut parent, a[i]), find(&mut parent, a[j]));
                    if ra == rb {
                        return None;
                    }
                    parent[ra as usize] = rb;
                }
            }
        }
        let mut s: State = a.iter().map(|&x| if x == 0 { 0 } else { find(&mut parent, x) }).collect();
        canonical(&mut s);
        Some((s, -(a.iter().filter(|&&x| x == 0).count() as i64)))
    }
}

struct Colors(u8);

impl Spec for Colors {
    fn introduce(&self, s: &[u8], pos: usize) -> Vec<(State, i64)> {
        (0..self.0).map(|c| (inserted(s, pos, c), 0)).collect()
    }
    fn forget(&self, s: &[u8], pos: usize) -> Option<State> {
        Some(removed(s, pos))
    }
    fn edge(&self, s: &[u8], pu: usize, pv: usize) -> Vec<State> {
        if s[pu] == s[pv] {
            Vec::new()
        } else {
            vec![s.to_vec()]
        }
    }
    fn join_key(&self, s: &[u8]) -> State {
        s.to_vec()
    }
    fn join(&self, a: &[u8], _: &[u8]) -> Option<(State, i64)> {
        Some((a.to_vec(), 0))
    }
}

fn relax(t: &mut Table, s: State, v: i64) {
    let e = t.entry(s).or_insert(i64::MAX);
    if v < *e {
        *e = v;
    }
}

struct Run {
    tables: Vec<Table>,
    stats: Stats,
}

fn run(nodes: &[NiceNode], spec: &dyn Spec) -> Result<Run> {
    let mut tables: Vec<Table> = Vec::with_capacity(nodes.len());
    let mut stats = Stats { nice_nodes: nodes.len(), ..Stats::default() };
    for node in nodes {
        let mut t = Table::new();
        match node.kind {
            NiceKind::Leaf => {
                t.insert(Vec::new(), 0);
            }
            NiceKind::Introduce(v) => {
                let pos = node.bag.binary_search(&v).expect("introduced vertex is in the bag");
                for (s, &val) in &tables[node.children[0]] {
                    for (ns, c) in spec.introduce(s, pos) {
                        relax(&mut t, ns, val + c);
                    }
                }
            }
            NiceKind::Forget(v) => {
                let child = &nodes[node.children[0]];
                let pos = child.bag.binary_search(&v).expect("forgotten vertex is in the child bag");
                for (s, &val) in &tables[node.children[0]] {
                    if let Some(ns) = spec.forget(s, pos) {
                        relax(&mut t, ns, val);
                    }
                }
            }
            NiceKind::IntroduceEdge(u, v) => {
                let pu = node.bag.binary_search(&u).expect("edge endpoint in bag");
                let pv = node.bag.binary_search(&v).expect("edge endpoint in bag");
                for (s, &val) in &tables[node.children[0]] {
                    for ns in spec.edge(s, pu, pv) {
                        relax(&mut t, ns, val);
                    }
                }
            }
            NiceKind::Join => {
                let groups = group(spec, &tables[node.children[1]]);
                for (a, &va) in &tables[node.children[0]] {
                    if let Some(list) = groups.get(&spec.join_key(a)) {
                        for (b, vb) in list {
                            if let Some((ns, adj)) = spec.join(a, b) {
                                relax(&mut t, ns, va + vb + adj);
                            }
                        }
                    }
                }
            }
        }
        stats.max_table = stats.max_table.max(t.len());
        stats.total_entries += t.len();
        if t.len() > MAX_TABLE {
            return Err(Error::Guardrail(format!("DP table of {} entries exceeds {MAX_TABLE}", t.len())));
        }
        tables.push(t);
    }
    Ok(Run { tables, stats })
}

fn group<'t>(spec: &dyn Spec, t: &'t Table) -> BTreeMap<State, Vec<(&'t State, i64)>> {
    let mut g: BTreeMap<State, Vec<(&State, i64)>> = BTreeMap::new();
    for (s, &v) in t {
        g.entry(spec.join_key(s)).or_default().push((s, v));
    }
    g
}

/// Walks an optimal path back down and returns the state each vertex had
/// when it was forgotten. `None` if the root table is empty.
fn trace(nodes: &[NiceNode], spec: &dyn Spec, run: &Run) -> Option<(i64, Vec<u8>)> {
    let root = nodes.len() - 1;
    let best = *run.tables[root].get(&Vec::new())?;
    let mut decision = vec![0u8; nodes.iter().map(|n| n.bag.iter().max().map_or(0, |m| m + 1)).max().unwrap_or(0)];
    let mut stack = vec![(root, Vec::<u8>::new(), best)];
    while let Some((i, state, val)) = stack.pop() {
        let node = &nodes[i];
        let tabs = &run.tables;
        match node.kind {
            NiceKind::Leaf => {}
            NiceKind::Introduce(v) => {
                let pos = node.bag.binary_search(&v).unwrap();
                let c = node.children[0];
                let (cs, cv) = tabs[c]
                    .iter()
                    .find(|(s, &cv)| spec.introduce(s, pos).into_iter().any(|(ns, k)| ns == state && cv + k == val))
                    .expect("introduce predecessor");
                stack.push((c, cs.clone(), *cv));
            }
            NiceKind::Forget(v) => {
                let c = node.children[0];
                let pos = nodes[c].bag.binary_search(&v).unwrap();
                let (cs, cv) = tabs[c]
                    .iter()
                    .find(|(s, &cv)| cv == val && spec.forget(s, pos).as_ref() == Some(&state))
                    .expect("forget predecessor");
                decision[v] = cs[pos];
                stack.push((c, cs.clone(), *cv));
            }
            NiceKind::IntroduceEdge(u, v) => {
                let pu = node.bag.binary_search(&u).unwrap();
                let pv = node.bag.binary_search(&v).unwrap();
                let c = node.children[0];
                let (cs, cv) = tabs[c]
                    .iter()
                    .find(|(s, &cv)| cv == val && spec.edge(s, pu, pv).contains(&state))
                    .expect("edge predecessor");
                stack.push((c, cs.clone(), *cv));
            }
            NiceKind::Join => {
                let (l, r) = (node.children[0], node.children[1]);
                let groups = group(spec, &tabs[r]);
                let mut found = None;
                'outer: for (a, &va) in &tabs[l] {
                    if let Some(list) = groups.get(&spec.join_key(a)) {
                        for (b, vb) in list {
                            if let Some((ns, adj)) = spec.join(a, b) {
                                if ns == state && va + vb + adj == val {
                                    found = Some((a.clone(), va, (*b).clone(), *vb));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                let (a, va, b, vb) = found.expect("join predecessors");
                stack.push((r, b, vb));
                stack.push((l, a, va));
            }
        }
    }
    Some((best, decision))
}

pub(super) fn solve(g: &Graph, problem: Problem, td: &TreeDecomposition) -> Result<Solution> {
    let nodes = nice_decomposition(g, td);
    let n = g.n();
    let pick = |dec: &[u8], want: u8| -> VertexSet { (0..n).filter(|&v| dec[v] == want).collect() };
    let done = |value: usize, feasible: bool, witness: Witness, stats: Stats| Solution {
        problem,
        value,
        feasible,
        witness,
        mode: Mode::Exact,
        stats,
    };
    match problem {
        Problem::StableSet | Problem::VertexCover => {
            let r = run(&nodes, &Stable)?;
            let (_, dec) = trace(&nodes, &Stable, &r).expect("the empty set is stable");
            let stable = pick(&dec, 1);
            let set = if problem == Problem::StableSet { stable } else { VertexSet::range(n).difference(&stable) };
            Ok(done(set.len(), true, Witness::Set(set), r.stats))
        }
        Problem::DominatingSet => {
            let r = run(&nodes, &Dominating)?;
            let (_, dec) = trace(&nodes, &Dominating, &r).expect("V dominates");
            let set = pick(&dec, 0);
            Ok(done(set.len(), true, Witness::Set(set), r.stats))
        }
        Problem::FeedbackVertexSet => {
            let r = run(&nodes, &Forest)?;
            let (_, dec) = trace(&nodes, &Forest, &r).expect("deleting V leaves a forest");
            let set = pick(&dec, 0);
            Ok(done(set.len(), true, Witness::Set(set), r.stats))
        }
        Problem::RColoring(k) => {
            if n > 0 && k > td.max_bag_size().max(1) {
                // Any graph with a decomposition of width w is (w+1)-colourable;
                // cap the palette to keep states in a byte.
                let capped = td.max_bag_size().max(1);
                let mut s = solve(g, Problem::RColoring(capped), td)?;
                s.problem = problem;
                return Ok(s);
            }
            let colors = Colors(k.min(255) as u8);
            let r = run(&nodes, &colors)?;
            Ok(match trace(&nodes, &colors, &r) {
                Some((_, dec)) => done(1, true, Witness::Coloring(dec[..n].iter().map(|&c| c as usize).collect()), r.stats),
                None => done(0, false, Witness::None, r.stats),
            })
        }
        Problem::Coloring => {
            if n == 0 {
                return Ok(done(0, true, Witness::Coloring(Vec::new()), Stats { nice_nodes: nodes.len(), ..Stats::default() }));
            }
            let mut stats = Stats { nice_nodes: nodes.len(), ..Stats::default() };
            for k in 1..=td.max_bag_size().max(1) {
                let colors = Colors(k as u8);
                let r = run(&nodes, &colors)?;
                stats.max_table = stats.max_table.max(r.stats.max_table);
                stats.total_entries += r.stats.total_entries;
                if let Some((_, dec)) = trace(&nodes, &colors, &r) {
                    let mut c: Vec<usize> = dec[..n].iter().map(|&c| c as usize).collect();
                    normalise_colours(&mut c);
                    return Ok(done(k, true, Witness::Coloring(c), stats));
                }
            }
            unreachable!("a decomposition of width w gives a (w+1)-colouring")
        }
    }
}

/// Renumbers colours by first use so that a k-colouring uses exactly 0..k.
fn normalise_colours(c: &mut [usize]) {
    let mut map = BTreeMap::new();
    for x in c.iter_mut() {
        let next = map.len();
        *x = *map.entry(*x).or_insert(next);
    }
}
