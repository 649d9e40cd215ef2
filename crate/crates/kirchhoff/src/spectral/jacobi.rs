//! Cyclic Jacobi rotations for dense real symmetric matrices.
//!
//! Each rotation annihilates one off-diagonal pair `(p, q)`; sweeps visit
//! every pair in row order. Iteration stops once the off-diagonal Frobenius
//! norm drops to `RELATIVE_TOLERANCE · ‖A‖_F` of the input matrix.

use crate::error::{Error, Result};

pub const RELATIVE_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues (unsorted, in diagonal order) and optionally the eigenvectors,
/// stored column-major: column `k` of `vectors` pairs with `values[k]`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub n: usize,
    pub values: Vec<f64>,
    pub vectors: Option<Vec<f64>>,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> Option<&[f64]> {
        self.vectors.as_deref().map(|v| &v[k * self.n..(k + 1) * self.n])
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Diagonalizes the row-major symmetric `n × n` matrix `a` in place.
pub fn eigen_symmetric(mut a: Vec<f64>, n: usize, want_vectors: bool) -> Result<SymmetricEigen> {
    assert_eq!(a.len(), n * n, "matrix storage does not match order");
    let frobenius = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = RELATIVE_TOLERANCE * frobenius;
    // column-major eigenvector accumulator, starts as the identity
    let mut v = want_vectors.then(|| {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    });

    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                if let Some(v) = v.as_mut() {
                    let (col_p, col_q) = (p * n, q * n);
                    for k in 0..n {
                        let vkp = v[col_p + k];
                        let vkq = v[col_q + k];
                        v[col_p + k] = c * vkp - s * vkq;
                        v[col_q + k] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }

    let values = (0..n).map(|i| a[i * n + i]).collect();
    Ok(SymmetricEigen { n, values, vectors: v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_vec(a: &[f64], n: usize, x: &[f64]) -> Vec<f64> {
        (0..n).map(|i| (0..n).map(|j| a[i * n + j] * x[j]).sum()).collect()
    }

    #[test]
    fn two_by_two_closed_form() {
        // [[2, 1], [1, 2]] has eigenvalues 1 and 3.
        let e = eigen_symmetric(vec![2.0, 1.0, 1.0, 2.0], 2, false).unwrap();
        let mut vals = e.values.clone();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn eigenpairs_satisfy_definition() {
        let n = 6;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let x = ((i * 7 + j * 3) % 11) as f64 - 5.0;
                a[i * n + j] = x;
                a[j * n + i] = x;
            }
        }
        let e = eigen_symmetric(a.clone(), n, true).unwrap();
        for k in 0..n {
            let v = e.vector(k).unwrap();
            let av = mat_vec(&a, n, v);
            for i in 0..n {
                assert!((av[i] - e.values[k] * v[i]).abs() < 1e-10);
            }
            let norm: f64 = v.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
        assert!((e.values.iter().sum::<f64>() - trace).abs() < 1e-10);
    }

    #[test]
    fn diagonal_and_empty_inputs() {
        let e = eigen_symmetric(vec![3.0, 0.0, 0.0, -1.0], 2, true).unwrap();
        assert_eq!(e.values, vec![3.0, -1.0]);
        let e = eigen_symmetric(Vec::new(), 0, true).unwrap();
        assert!(e.values.is_empty());
    }
}
