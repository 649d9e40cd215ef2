//! Pointwise identities and inequalities checked numerically on one input.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{kf_resistance, kf_spectral, kf_vertex, laplacian_spectrum, wiener, Spectrum};

/// Strict inequalities must clear this margin.
pub const STRICT_MARGIN: f64 = 1e-7;
/// Slack for spectral identities.
pub const SPECTRAL_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum Identity {
    /// Removing `edge` (present, not a bridge) raises Kf; adding it (absent) lowers Kf.
    Monotonicity { g: Graph, edge: (usize, usize) },
    /// Adding the absent `edge` interlaces the spectra.
    Interlacing { g: Graph, edge: (usize, usize) },
    /// Spectrum of the complement is `{n − μᵢ : i < n} ∪ {0}`.
    ComplementSpectrum { g: Graph },
    /// `W ≥ Kf`, with equality exactly for trees.
    WienerBound { g: Graph },
    /// Gluing `g1` at `x1` to `g2` at `x2`: the cut-vertex formula.
    CutVertex { g1: Graph, x1: usize, g2: Graph, x2: usize },
    /// Hanging `tree` by `x` at `v0` gives no more Kf than hanging a path by an end.
    PathAttachment { g0: Graph, v0: usize, tree: Graph, x: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityOutcome {
    pub holds: bool,
    /// Signed gap for inequalities, absolute error for identities.
    pub residual: f64,
}

impl Identity {
    pub fn name(&self) -> &'static str {
        match self {
            Identity::Monotonicity { .. } => "monotonicity",
            Identity::Interlacing { .. } => "interlacing",
            Identity::ComplementSpectrum { .. } => "complement-spectrum",
            Identity::WienerBound { .. } => "wiener-bound",
            Identity::CutVertex { .. } => "cut-vertex",
            Identity::PathAttachment { .. } => "path-attachment",
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedInput(msg.into())
}

fn strict(gap: f64) -> IdentityOutcome {
    IdentityOutcome { holds: gap > STRICT_MARGIN, residual: gap }
}

fn path(t: usize) -> Graph {
    Graph::new(t, (1..t).map(|v| (v - 1, v))).expect("path edges")
}

/// Largest interlacing violation between `before` and `after = before + e`.
pub fn interlacing_violation(before: &Spectrum, after: &Spectrum) -> f64 {
    let (a, b) = (before.values(), after.values());
    let mut worst: f64 = 0.0;
    for i in 0..a.len() {
        worst = worst.max(a[i] - b[i]);
        if i + 1 < b.len() {
            worst = worst.max(b[i + 1] - a[i]);
        }
    }
    worst
}

pub fn check_identity(identity: &Identity) -> Result<IdentityOutcome> {
    match identity {
        Identity::Monotonicity { g, edge: (u, v) } => {
            if !g.is_connected() {
                return Err(malformed("monotonicity needs a connected graph"));
            }
            if g.has_edge(*u, *v) {
                let smaller = g.without_edge(*u, *v)?;
                if !smaller.is_connected() {
                    return Err(malformed(format!("edge ({u}, {v}) is a bridge")));
                }
                Ok(strict(kf_spectral(&smaller)? - kf_spectral(g)?))
            } else {
                let larger = g.with_edge(*u, *v)?;
                Ok(strict(kf_spectral(g)? - kf_spectral(&larger)?))
            }
        }
        Identity::Interlacing { g, edge: (u, v) } => {
            let larger = g.with_edge(*u, *v)?;
            let worst = interlacing_violation(&laplacian_spectrum(g)?, &laplacian_spectrum(&larger)?);
            Ok(IdentityOutcome { holds: worst <= SPECTRAL_SLACK, residual: worst })
        }
        Identity::ComplementSpectrum { g } => {
            let n = g.order();
            let s = laplacian_spectrum(g)?;
            let mut predicted: Vec<f64> = s.values()[..n - 1].iter().map(|mu| n as f64 - mu).collect();
            predicted.push(0.0);
            let predicted = Spectrum::new(predicted, s.zero_tol());
            let actual = laplacian_spectrum(&g.complement())?;
            let gap = predicted.max_abs_diff(&actual).expect("same order");
            Ok(IdentityOutcome { holds: gap <= SPECTRAL_SLACK, residual: gap })
        }
        Identity::WienerBound { g } => {
            let w = wiener(g)? as f64;
            let kf = kf_spectral(g)?;
            let gap = w - kf;
            let holds = if g.is_tree() { gap.abs() <= 1e-8 * w.max(1.0) } else { gap > STRICT_MARGIN };
            Ok(IdentityOutcome { holds, residual: gap })
        }
        Identity::CutVertex { g1, x1, g2, x2 } => {
            let glued = g1.glue(*x1, g2, *x2)?;
            let (n1, n2) = (g1.order() as f64, g2.order() as f64);
            let formula = kf_resistance(g1)?
                + kf_resistance(g2)?
                + (n1 - 1.0) * kf_vertex(g2, *x2)?
                + (n2 - 1.0) * kf_vertex(g1, *x1)?;
            let actual = kf_spectral(&glued)?;
            let err = (actual - formula).abs();
            Ok(IdentityOutcome { holds: err <= 1e-8 * actual.max(1.0), residual: err })
        }
        Identity::PathAttachment { g0, v0, tree, x } => {
            if !tree.is_tree() || tree.order() < 2 {
                return Err(malformed("path attachment needs a tree with at least two vertices"));
            }
            let g = g0.glue(*v0, tree, *x)?;
            let with_path = g0.glue(*v0, &path(tree.order()), 0)?;
            let gap = kf_spectral(&with_path)? - kf_spectral(&g)?;
            let degrees = tree.degrees();
            let pendant_path = tree.max_degree() <= 2 && degrees[*x] == 1;
            let holds = if pendant_path { gap.abs() <= 1e-8 * gap.abs().max(1.0) } else { gap > STRICT_MARGIN };
            Ok(IdentityOutcome { holds, residual: gap })
        }
    }
}
