#![allow(dead_code)]

use ehf_core::Graph;
use proptest::prelude::*;

/// A graph on `lo..=hi` vertices with independent edge bits.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Graph plus a nonnegative integer weight per vertex, not all zero.
pub fn weighted(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<u64>)> {
    graph(lo.max(1), hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0u64..6, n), 0..n).prop_map(|(g, mut w, fix)| {
            if w.iter().all(|&x| x == 0) {
                w[fix] = 1;
            }
            (g, w)
        })
    })
}
