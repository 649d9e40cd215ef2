//! Lower and upper Kirchhoff-index bounds for `Kₙ` minus `p` edges, and the
//! spanning-tree lower bound they rest on.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::rational::{integer, ratio, ExactRational};
use crate::spectral::tree_count;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRecord {
    pub n: usize,
    pub p: usize,
    /// `n − 1 + 2p/(n − 2)`, attained exactly by `Kₙ − pK₂`.
    pub lower_kf: ExactRational,
    /// Needs `t(G)` and `δ(G)`; present only when a graph was supplied.
    pub upper_kf_full: Option<ExactRational>,
    /// Needs `δ(G)`; present only when a graph was supplied.
    pub upper_kf_simple: Option<ExactRational>,
    pub tree_count_lower: BigUint,
}

/// `n^(n−p−2) · (n−1)^(p−1) · (n−p−1)` for a connected `Kₙ` minus `p` edges.
pub fn tree_count_lower(n: usize, p: usize) -> Result<BigUint> {
    if p == 0 || p + 2 > n {
        return Err(Error::ParamOutOfRange(format!("tree-count bound needs 1 ≤ p ≤ n − 2, got n = {n}, p = {p}")));
    }
    let n_big = BigUint::from(n);
    Ok(n_big.pow((n - p - 2) as u32) * BigUint::from(n - 1).pow((p - 1) as u32) * BigUint::from(n - p - 1))
}

fn big(x: BigUint) -> BigInt {
    BigInt::from(x)
}

pub fn bound_eval(n: usize, p: usize, g: Option<&Graph>) -> Result<BoundRecord> {
    if n < 4 || p < 2 || p > n / 2 {
        return Err(Error::ParamOutOfRange(format!("need 2 ≤ p ≤ ⌊n/2⌋, got n = {n}, p = {p}")));
    }
    let (ni, pi) = (n as i64, p as i64);
    let lower_kf = integer(ni - 1) + ratio(2 * pi, ni - 2);
    let tree_lower = tree_count_lower(n, p)?;
    let base = integer(ni - 1 - pi) + ratio(ni, ni - pi - 1);

    let (full, simple) = match g {
        None => (None, None),
        Some(g) => {
            let pairs = n * (n - 1) / 2;
            if g.order() != n || g.size() + p != pairs {
                return Err(Error::MalformedInput(format!(
                    "graph with {} vertices and {} edges is not K_{n} minus {p} edges",
                    g.order(),
                    g.size()
                )));
            }
            let t = tree_count(g);
            if t == BigUint::ZERO {
                return Err(Error::Disconnected { components: g.component_count() });
            }
            let delta = g.min_degree() as i64;
            let numerator = BigUint::from((p - 1) as u64 * delta as u64)
                * BigUint::from(n).pow((n - p - 1) as u32)
                * BigUint::from(n - 1).pow((p - 2) as u32);
            let full = base.clone() + BigRational::new(big(numerator), big(t));
            let simple = base.clone() + ratio(ni * (pi - 1) * delta, (ni - 1) * (ni - pi - 1));
            (Some(full), Some(simple))
        }
    };
    Ok(BoundRecord {
        n,
        p,
        lower_kf,
        upper_kf_full: full,
        upper_kf_simple: simple,
        tree_count_lower: tree_lower,
    })
}
