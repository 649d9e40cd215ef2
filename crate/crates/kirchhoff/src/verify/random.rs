//! Seeded random connected graphs for the identity suite and edge trimming.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::enumerate::{complete_edges, prufer_edges};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Uniform labeled spanning tree plus `m − n + 1` extra edges chosen
/// uniformly from the rest; `m` is clamped to the feasible range.
pub fn random_connected(rng: &mut SeededRng, n: usize, m: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::empty(1);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut edges = prufer_edges(&seq, n);
    let mut rest: Vec<(usize, usize)> =
        complete_edges(n).into_iter().filter(|e| !edges.contains(e)).collect();
    rest.shuffle(rng);
    let extra = m.clamp(n - 1, n * (n - 1) / 2) - (n - 1);
    edges.extend(rest.into_iter().take(extra));
    Graph::new(n, edges).expect("valid edges")
}

/// Random order in `lo..=hi` and random size between a tree and `Kₙ`.
pub fn random_connected_any(rng: &mut SeededRng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let m = rng.gen_range(n.saturating_sub(1)..=n * (n - 1) / 2);
    random_connected(rng, n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_with_requested_size() {
        let mut r = rng(7);
        for _ in 0..50 {
            let g = random_connected_any(&mut r, 2, 12);
            assert!(g.is_connected());
        }
        let g = random_connected(&mut r, 9, 14);
        assert_eq!((g.order(), g.size()), (9, 14));
        assert_eq!(random_connected(&mut rng(3), 10, 20), random_connected(&mut rng(3), 10, 20));
    }
}
