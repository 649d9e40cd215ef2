//! Laplacian spectra, resistance distances and the indices built on them.

pub mod jacobi;
pub mod rational;
pub mod resistance;
pub mod spectrum;
pub mod trees;

pub use rational::{render_exact, render_real, ExactRational};
pub use resistance::{kf_cholesky, kf_exact, kf_resistance, kf_vertex, resistance_matrix, wiener, ResistanceMatrix};
pub use spectrum::{
    kf_from_spectrum, kf_spectral, laplacian_matrix, laplacian_spectrum, mu1_bounds,
    zero_tolerance, Mu1Bounds, Spectrum,
};
pub use trees::{tree_count, tree_count_checked, CheckedTreeCount, CrossCheck};
