//! Exact spanning-tree counts by the matrix-tree theorem.
//!
//! The reduced Laplacian (row and column 0 deleted) is reduced with Bareiss
//! fraction-free elimination over arbitrary-precision integers, so every
//! intermediate stays integral and the final pivot is the determinant.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::graph::Graph;

use super::spectrum::laplacian_spectrum;

/// Spectral products at or above this value are not checked in floating point.
/// Jacobi products on n ≤ 20 drift by about 2⁻⁴⁶ relative, so rounding stops
/// being reliable near 2⁴⁵.
pub const CROSS_CHECK_LIMIT: f64 = (1u64 << 40) as f64;

/// Determinant of a square integer matrix (row-major) by Bareiss elimination.
pub fn bareiss_determinant(mut m: Vec<BigInt>, n: usize) -> BigInt {
    assert_eq!(m.len(), n * n);
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, swap * n + j);
            }
            sign_flip = !sign_flip;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (&m[i * n + j] * &pivot - &m[i * n + k] * &m[k * n + j]) / &prev;
                m[i * n + j] = value;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = m[n * n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Number of spanning trees; zero for disconnected graphs.
pub fn tree_count(g: &Graph) -> BigUint {
    let n = g.order();
    if n <= 1 {
        return BigUint::one();
    }
    let size = n - 1;
    let mut m = vec![BigInt::zero(); size * size];
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if a > 0 {
                m[(a - 1) * size + (a - 1)] += 1;
                if b > 0 {
                    m[(a - 1) * size + (b - 1)] -= 1;
                }
            }
        }
    }
    let det = bareiss_determinant(m, size);
    match det.sign() {
        Sign::Minus => unreachable!("reduced Laplacian is positive semidefinite"),
        _ => det.magnitude().clone(),
    }
}

/// Outcome of comparing the exact count with `round(∏ μᵢ / n)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CrossCheck {
    Agreed,
    Disagreed { spectral: f64 },
    /// The spectral product is too large for a meaningful float comparison.
    Skipped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckedTreeCount {
    pub exact: BigUint,
    pub spectral_product: f64,
    pub check: CrossCheck,
}

/// `∏_{i<n} μᵢ / n` over the `n − 1` largest Laplacian eigenvalues.
pub fn spectral_tree_product(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n <= 1 {
        return Ok(1.0);
    }
    let s = laplacian_spectrum(g)?;
    Ok(s.values()[..n - 1].iter().product::<f64>() / n as f64)
}

pub fn tree_count_checked(g: &Graph) -> Result<CheckedTreeCount> {
    let exact = tree_count(g);
    let spectral_product = spectral_tree_product(g)?;
    let check = if spectral_product.abs() < CROSS_CHECK_LIMIT {
        let rounded = spectral_product.round().max(0.0);
        if exact.to_f64() == Some(rounded) {
            CrossCheck::Agreed
        } else {
            CrossCheck::Disagreed { spectral: spectral_product }
        }
    } else {
        CrossCheck::Skipped
    };
    Ok(CheckedTreeCount { exact, spectral_product, check })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::ToBigInt;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Cofactor expansion along the first row: exponential, tiny inputs only.
    fn laplace_det(m: &[i64], n: usize) -> i64 {
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|col| {
                let minor: Vec<i64> = (1..n)
                    .flat_map(|i| (0..n).filter(move |&j| j != col).map(move |j| (i, j)))
                    .map(|(i, j)| m[i * n + j])
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                sign * m[col] * laplace_det(&minor, n - 1)
            })
            .sum()
    }

    fn reduced_laplacian_i64(g: &Graph) -> Vec<i64> {
        let n = g.order() - 1;
        let mut m = vec![0i64; n * n];
        for &(u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if a > 0 {
                    m[(a - 1) * n + (a - 1)] += 1;
                    if b > 0 {
                        m[(a - 1) * n + (b - 1)] -= 1;
                    }
                }
            }
        }
        m
    }

    #[test]
    fn matches_cofactor_oracle() {
        let k4 = Graph::complete(4);
        assert_eq!(laplace_det(&reduced_laplacian_i64(&k4), 3), 16);
        assert_eq!(tree_count(&k4), BigUint::from(16u32));

        let minus_star = Graph::complete(6).without_edge(0, 1).unwrap().without_edge(0, 2).unwrap();
        let oracle = laplace_det(&reduced_laplacian_i64(&minus_star), 5);
        assert_eq!(oracle, 540);
        assert_eq!(tree_count(&minus_star), BigUint::from(540u32));

        assert_eq!(tree_count(&cycle(5)), BigUint::from(5u32));
    }

    #[test]
    fn cayley_formula_beyond_64_bits() {
        let n = 25u32;
        let expected = BigUint::from(n).pow(n - 2);
        assert_eq!(tree_count(&Graph::complete(n as usize)), expected);
    }

    #[test]
    fn disconnected_and_trivial() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(tree_count(&g).is_zero());
        assert!(tree_count(&Graph::empty(1)).is_one());
    }

    #[test]
    fn bareiss_handles_zero_pivot_with_swap() {
        let m: Vec<BigInt> = [0, 1, 2, 1, 0, 3, 4, -3, 8]
            .iter()
            .map(|&x: &i64| x.to_bigint().unwrap())
            .collect();
        assert_eq!(laplace_det(&[0, 1, 2, 1, 0, 3, 4, -3, 8], 3), -2);
        assert_eq!(bareiss_determinant(m, 3), BigInt::from(-2));
    }

    #[test]
    fn cross_check_states() {
        let c = tree_count_checked(&Graph::complete(6)).unwrap();
        assert_eq!(c.check, CrossCheck::Agreed);
        let c = tree_count_checked(&Graph::complete(20)).unwrap();
        assert_eq!(c.check, CrossCheck::Skipped);
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(tree_count_checked(&g).unwrap().check, CrossCheck::Agreed);
    }
}
