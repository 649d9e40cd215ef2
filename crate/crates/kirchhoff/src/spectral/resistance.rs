//! Resistance distances through the Moore–Penrose pseudoinverse of the
//! Laplacian, `r(i, j) = L⁺ᵢᵢ + L⁺ⱼⱼ − 2 L⁺ᵢⱼ`.

use crate::error::{Error, Result};
use crate::graph::{bfs, Graph};

use num_traits::Zero;

use super::rational::{integer, ExactRational};
use super::spectrum::{laplacian_eigen, zero_tolerance};

/// Symmetric matrix of effective resistances with zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceMatrix {
    n: usize,
    r: Vec<f64>,
}

impl ResistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.r[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.r[i * self.n..(i + 1) * self.n]
    }

    /// `Kf_x`: resistance from `x` to every other vertex, summed.
    pub fn row_sum(&self, x: usize) -> f64 {
        self.row(x).iter().sum()
    }

    /// Sum over unordered pairs.
    pub fn pair_sum(&self) -> f64 {
        let mut total = 0.0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                total += self.get(i, j);
            }
        }
        total
    }
}

pub fn resistance_matrix(g: &Graph) -> Result<ResistanceMatrix> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooSmall { n, required: 1 });
    }
    let eig = laplacian_eigen(g, true)?;
    let tol = zero_tolerance(g.max_degree());
    let zeros = eig.values.iter().filter(|mu| mu.abs() <= tol).count();
    if zeros != 1 {
        return Err(Error::Disconnected { components: zeros });
    }

    let mut pinv = vec![0.0; n * n];
    for (k, &mu) in eig.values.iter().enumerate() {
        if mu.abs() <= tol {
            continue;
        }
        let v = eig.vector(k).expect("eigenvectors requested");
        for i in 0..n {
            let scaled = v[i] / mu;
            for j in i..n {
                pinv[i * n + j] += scaled * v[j];
            }
        }
    }

    let mut r = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let value = (pinv[i * n + i] + pinv[j * n + j] - 2.0 * pinv[i * n + j]).max(0.0);
            r[i * n + j] = value;
            r[j * n + i] = value;
        }
    }
    Ok(ResistanceMatrix { n, r })
}

/// Kirchhoff index as the sum of pairwise resistances.
pub fn kf_resistance(g: &Graph) -> Result<f64> {
    Ok(resistance_matrix(g)?.pair_sum())
}

/// Kirchhoff index from `n·tr((L + J/n)⁻¹) − n`, via a Cholesky factor.
/// Much cheaper than an eigendecomposition; used inside exhaustive loops.
/// The shifted matrix is positive definite exactly when `g` is connected.
pub fn kf_cholesky(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooSmall { n, required: 1 });
    }
    let shift = 1.0 / n as f64;
    let mut a = vec![shift; n * n];
    for &(u, v) in g.edges() {
        a[u * n + v] -= 1.0;
        a[v * n + u] -= 1.0;
        a[u * n + u] += 1.0;
        a[v * n + v] += 1.0;
    }
    // lower factor in place
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= a[j * n + k] * a[j * n + k];
        }
        if d <= 1e-10 {
            return Err(Error::Disconnected { components: g.component_count() });
        }
        let d = d.sqrt();
        a[j * n + j] = d;
        for i in j + 1..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= a[i * n + k] * a[j * n + k];
            }
            a[i * n + j] = s / d;
        }
    }
    // tr(M⁻¹) = ‖L⁻¹‖²_F for the lower factor, column by column
    let mut trace = 0.0;
    let mut x = vec![0.0; n];
    for c in 0..n {
        for i in 0..n {
            if i < c {
                x[i] = 0.0;
                continue;
            }
            let mut s = if i == c { 1.0 } else { 0.0 };
            for k in c..i {
                s -= a[i * n + k] * x[k];
            }
            x[i] = s / a[i * n + i];
            trace += x[i] * x[i];
        }
    }
    Ok(n as f64 * trace - n as f64)
}

/// Exact Kirchhoff index: with `A` the inverse of the Laplacian with
/// vertex 0 removed, `Kf = n·tr(A) − ΣA`. Rational Gauss–Jordan, so meant
/// for the modest orders graph6 covers.
pub fn kf_exact(g: &Graph) -> Result<ExactRational> {
    let n = g.order();
    if n == 0 {
        return Err(Error::TooSmall { n, required: 1 });
    }
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let k = n - 1;
    let width = 2 * k;
    let zero = ExactRational::zero();
    let mut m = vec![zero.clone(); k * width];
    for (i, d) in g.degrees().into_iter().enumerate().skip(1) {
        m[(i - 1) * width + i - 1] = integer(d as i64);
        m[(i - 1) * width + k + i - 1] = integer(1);
    }
    for &(u, v) in g.edges() {
        if u > 0 && v > 0 {
            m[(u - 1) * width + v - 1] = integer(-1);
            m[(v - 1) * width + u - 1] = integer(-1);
        }
    }
    for col in 0..k {
        // the reduced Laplacian of a connected graph is positive definite,
        // so pivots on the diagonal never vanish
        let pivot = m[col * width + col].clone();
        for j in col..width {
            let x = &m[col * width + j] / &pivot;
            m[col * width + j] = x;
        }
        for row in 0..k {
            if row == col || m[row * width + col].is_zero() {
                continue;
            }
            let factor = m[row * width + col].clone();
            for j in col..width {
                let x = &m[row * width + j] - &factor * &m[col * width + j];
                m[row * width + j] = x;
            }
        }
    }
    let mut trace = zero.clone();
    let mut total = zero;
    for i in 0..k {
        for j in 0..k {
            let x = &m[i * width + k + j];
            total += x;
            if i == j {
                trace += x;
            }
        }
    }
    Ok(integer(n as i64) * trace - total)
}

pub fn kf_vertex(g: &Graph, x: usize) -> Result<f64> {
    if x >= g.order() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.order() });
    }
    Ok(resistance_matrix(g)?.row_sum(x))
}

/// Wiener index: sum of shortest-path distances over unordered pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let adj = g.neighbors();
    let mut total = 0u64;
    for s in 0..g.order() {
        let row = bfs(&adj, s);
        total += row.dist[s + 1..]
            .iter()
            .map(|d| d.finite().expect("connected graph") as u64)
            .sum::<u64>();
    }
    Ok(total)
}
