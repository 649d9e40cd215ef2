//! Kirchhoff indices, resistance distances and Laplacian spectra of small
//! simple graphs, a catalog of named extremal families with exact closed
//! forms, and exhaustive checkers for the extremal orderings among them.
//!
//! ```
//! use kirchhoff::{Graph, spectral};
//!
//! let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
//! let kf = spectral::kf_spectral(&c4).unwrap();
//! assert!((kf - 5.0).abs() < 1e-12);
//! ```

pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilySpec, FamilyTemplate};
pub use graph::{Combine, DegreeStats, Distance, DistanceRow, EdgeEdit, Graph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    struct Overview;
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/resistance.md")]
    struct Resistance;
    #[doc = include_str!("../../../book/src/spectra.md")]
    struct Spectra;
    #[doc = include_str!("../../../book/src/families.md")]
    struct Families;
    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
