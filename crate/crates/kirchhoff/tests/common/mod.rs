#![allow(dead_code)]

use kirchhoff::Graph;
use proptest::prelude::*;

/// Any simple graph on `lo..=hi` vertices.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e));
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected graph: a random spanning tree plus any extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo.max(1)..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(0..n.max(1), n.saturating_sub(1)),
            proptest::collection::vec(proptest::bool::weighted(0.3), pairs),
        )
            .prop_map(move |(parents, mask)| {
                // vertex v > 0 hangs from some earlier vertex
                let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (parents[v - 1] % v, v)).collect();
                for (e, keep) in (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).zip(mask) {
                    if keep && !edges.contains(&e) {
                        edges.push(e);
                    }
                }
                Graph::new(n, edges).unwrap()
            })
    })
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}
