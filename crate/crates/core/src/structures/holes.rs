//! Enumeration of holes by extending induced paths from their smallest vertex.

use crate::graph::Graph;
use crate::search::Budget;

/// Rotates a cycle to start at its smallest vertex, heading toward the
/// smaller of that vertex's two cycle neighbours.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let next = cycle[(start + 1) % k];
    let prev = cycle[(start + k - 1) % k];
    if next <= prev {
        (0..k).map(|i| cycle[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| cycle[(start + k - i) % k]).collect()
    }
}

/// Calls `visit` once per hole (in canonical form) until it returns `false`.
/// Returns `false` if the budget ran out before the enumeration finished.
pub fn for_each_hole(g: &Graph, budget: &mut Budget, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut path = Vec::with_capacity(n);
    // blocked[v] counts interior path vertices adjacent to v.
    let mut blocked = vec![0u32; n];
    for s in 0..n {
        path.clear();
        path.push(s);
        match extend(g, s, &mut path, &mut blocked, budget, &mut visit) {
            Walk::Continue => {}
            Walk::Stop => return true,
            Walk::OutOfBudget => return false,
        }
    }
    true
}

enum Walk {
    Continue,
    Stop,
    OutOfBudget,
}

fn extend(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    blocked: &mut [u32],
    budget: &mut Budget,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Walk {
    if !budget.tick() {
        return Walk::OutOfBudget;
    }
    let head = *path.last().unwrap();
    let k = path.len();
    for &v in g.neighbors(head) {
        if v <= s || blocked[v] > 0 || path.contains(&v) {
            continue;
        }
        // v is adjacent to the head and to no earlier path vertex except
        // possibly s (s is never counted in `blocked`).
        let closes = k >= 3 && g.has_edge(v, s);
        if k >= 2 && g.has_edge(v, s) && !closes {
            continue;
        }
        if closes {
            // Report each hole once: second vertex smaller than the last.
            if path[1] < v {
                path.push(v);
                let keep_going = visit(path);
                path.pop();
                if !keep_going {
                    return Walk::Stop;
                }
            }
            continue;
        }
        // Entering v: the old head becomes interior, block its neighbours.
        if k >= 2 {
            for &w in g.neighbors(head) {
                blocked[w] += 1;
            }
        }
        path.push(v);
        let r = extend(g, s, path, blocked, budget, visit);
        path.pop();
        if k >= 2 {
            for &w in g.neighbors(head) {
                blocked[w] -= 1;
            }
        }
        match r {
            Walk::Continue => {}
            other => return other,
        }
    }
    Walk::Continue
}

/// All holes, or `None` if the budget ran out.
pub fn all_holes(g: &Graph, budget: &mut Budget) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if for_each_hole(g, budget, |h| {
        out.push(h.to_vec());
        true
    }) {
        Some(out)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn count(g: &Graph) -> usize {
        all_holes(g, &mut Budget::unlimited()).unwrap().len()
    }

    #[test]
    fn hole_counts() {
        assert_eq!(count(&cycle(6)), 1);
        assert_eq!(count(&cycle(3)), 0);
        assert_eq!(count(&complete(6)), 0);
        assert_eq!(count(&path(6)), 0);
        // K_{2,3}: three C4s.
        assert_eq!(count(&complete_bipartite(2, 3)), 3);
        // Petersen: 12 five-holes, 10 six-holes (the 8- and 9-cycles have chords).
        assert_eq!(count(&petersen()), 22);
        // 3x3 grid: four squares and the outer 8-cycle.
        assert_eq!(count(&grid(3, 3)), 5);
    }

    #[test]
    fn holes_are_canonical_and_valid() {
        let g = petersen();
        for h in all_holes(&g, &mut Budget::unlimited()).unwrap() {
            assert!(g.is_hole(&h));
            assert_eq!(canonical_cycle(&h), h);
        }
    }

    #[test]
    fn budget_is_reported() {
        assert!(all_holes(&petersen(), &mut Budget::new(3)).is_none());
    }
}
