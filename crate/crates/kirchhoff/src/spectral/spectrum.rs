use crate::error::{Error, Result};
use crate::graph::Graph;

use super::jacobi::{eigen_symmetric, SymmetricEigen};

/// Laplacian eigenvalues, sorted non-increasing, with the threshold below
/// which a value counts as zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    zero_tol: f64,
}

/// Zero threshold for the Laplacian of a graph with maximum degree `max_degree`.
pub fn zero_tolerance(max_degree: usize) -> f64 {
    1e-8 * (max_degree.max(1) as f64)
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>, zero_tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, zero_tol }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn zero_tol(&self) -> f64 {
        self.zero_tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The largest eigenvalue `μ₁`, zero for the empty graph on no vertices.
    pub fn largest(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self, value: f64) -> bool {
        value.abs() <= self.zero_tol
    }

    /// Number of zero-classified eigenvalues; equals the component count.
    pub fn zero_count(&self) -> usize {
        self.values.iter().filter(|&&x| self.is_zero(x)).count()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied().filter(|&x| !self.is_zero(x))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Largest absolute eigenvalue-by-eigenvalue difference.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// Dense row-major `D − A`.
pub fn laplacian_matrix(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut l = vec![0.0; n * n];
    for &(u, v) in g.edges() {
        l[u * n + u] += 1.0;
        l[v * n + v] += 1.0;
        l[u * n + v] -= 1.0;
        l[v * n + u] -= 1.0;
    }
    l
}

pub(crate) fn laplacian_eigen(g: &Graph, want_vectors: bool) -> Result<SymmetricEigen> {
    eigen_symmetric(laplacian_matrix(g), g.order(), want_vectors)
}

pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::TooSmall { n: 0, required: 1 });
    }
    let eig = laplacian_eigen(g, false)?;
    Ok(Spectrum::new(eig.values, zero_tolerance(g.max_degree())))
}

/// `Kf = n · Σ 1/μᵢ` over the `n − 1` non-zero eigenvalues of a connected graph.
pub fn kf_from_spectrum(spectrum: &Spectrum) -> Result<f64> {
    let n = spectrum.len();
    if n < 2 {
        return Err(Error::TooSmall { n, required: 2 });
    }
    let zeros = spectrum.zero_count();
    if zeros != 1 {
        return Err(Error::Disconnected { components: zeros });
    }
    Ok(n as f64 * spectrum.nonzero().map(|mu| 1.0 / mu).sum::<f64>())
}

/// Kirchhoff index from the Laplacian spectrum.
pub fn kf_spectral(g: &Graph) -> Result<f64> {
    if g.order() < 2 {
        return Err(Error::TooSmall { n: g.order(), required: 2 });
    }
    kf_from_spectrum(&laplacian_spectrum(g)?)
}

/// Bracket for the largest Laplacian eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mu1Bounds {
    /// `Δ + 1`
    pub lower: f64,
    /// max over edges `uv` of `|N(u) ∪ N(v)|`
    pub upper: f64,
}

pub fn mu1_bounds(g: &Graph) -> Result<Mu1Bounds> {
    if g.size() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.order();
    let words = n.div_ceil(64);
    let mut rows = vec![0u64; n * words];
    for &(u, v) in g.edges() {
        rows[u * words + v / 64] |= 1 << (v % 64);
        rows[v * words + u / 64] |= 1 << (u % 64);
    }
    let upper = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            (0..words)
                .map(|w| (rows[u * words + w] | rows[v * words + w]).count_ones() as usize)
                .sum::<usize>()
        })
        .max()
        .unwrap_or(0);
    Ok(Mu1Bounds {
        lower: (g.max_degree() + 1) as f64,
        upper: upper as f64,
    })
}
