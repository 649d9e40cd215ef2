//! Extremal search over an enumeration space.
//!
//! Results are grouped by Kf value: labeled copies of one graph share a
//! group, so the top `k` rows name `k` distinct values. Each group keeps its
//! smallest graph6 string and its multiplicity.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::kf_cholesky;

use super::enumerate::{par_prufer_fold, prufer_decode, EnumerationSpec, SpaceMode};

/// Relative tolerance under which two Kf values rank as a tie.
pub const TIE_TOLERANCE: f64 = 1e-7;

pub fn kf_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * a.abs().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Min,
    Max,
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

/// Graphs sharing one Kf value.
#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub kf: f64,
    /// Exact value for tree spaces, where Kf is the Wiener index.
    pub wiener: Option<u64>,
    /// Smallest graph6 string among the members seen.
    pub graph6: String,
    pub count: u64,
}

impl Group {
    fn same_value(&self, kf: f64, wiener: Option<u64>) -> bool {
        match (self.wiener, wiener) {
            (Some(a), Some(b)) => a == b,
            _ => kf_tie(self.kf, kf),
        }
    }
}

/// The best `k` value groups seen so far, best first.
#[derive(Debug, Clone, PartialEq)]
pub struct TopGroups {
    objective: Objective,
    k: usize,
    groups: Vec<Group>,
}

impl TopGroups {
    pub fn new(objective: Objective, k: usize) -> Self {
        TopGroups { objective, k, groups: Vec::with_capacity(k + 1) }
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn into_groups(self) -> Vec<Group> {
        self.groups
    }

    /// Whether value `a` ranks strictly ahead of value `b`.
    fn ahead(&self, a: (f64, Option<u64>), b: (f64, Option<u64>)) -> bool {
        if let (Some(x), Some(y)) = (a.1, b.1) {
            return match self.objective {
                Objective::Min => x < y,
                Objective::Max => x > y,
            };
        }
        !kf_tie(a.0, b.0)
            && match self.objective {
                Objective::Min => a.0 < b.0,
                Objective::Max => a.0 > b.0,
            }
    }

    /// Whether a value would enter or join the current top `k`.
    pub fn admits(&self, kf: f64, wiener: Option<u64>) -> bool {
        match self.groups.last() {
            _ if self.k == 0 => false,
            Some(last) if self.groups.len() == self.k => !self.ahead((last.kf, last.wiener), (kf, wiener)),
            _ => true,
        }
    }

    /// Records `count` graphs with the given value; `graph6` is only called
    /// when the value is admitted.
    pub fn offer(&mut self, kf: f64, wiener: Option<u64>, count: u64, graph6: impl FnOnce() -> String) {
        if !self.admits(kf, wiener) {
            return;
        }
        let code = graph6();
        if let Some(g) = self.groups.iter_mut().find(|g| g.same_value(kf, wiener)) {
            g.count += count;
            if code < g.graph6 {
                g.graph6 = code;
            }
            return;
        }
        let at = self.groups.iter().position(|g| self.ahead((kf, wiener), (g.kf, g.wiener))).unwrap_or(self.groups.len());
        self.groups.insert(at, Group { kf, wiener, graph6: code, count });
        self.groups.truncate(self.k);
    }

    pub fn merge(mut self, other: TopGroups) -> TopGroups {
        for g in other.groups {
            self.offer(g.kf, g.wiener, g.count, || g.graph6);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchHit {
    pub rank: usize,
    pub kf: f64,
    pub wiener: Option<u64>,
    pub graph6: String,
    pub count: u64,
}

fn encode(g: &Graph) -> String {
    graph6::encode(g).expect("enumeration orders fit graph6")
}

/// Top `k` Kf values over the connected members of `spec`, best first,
/// ties broken by graph6 text.
pub fn extremal_search(
    spec: &EnumerationSpec,
    objective: Objective,
    k: usize,
    budget: u64,
) -> Result<Vec<SearchHit>> {
    let top = match spec.mode {
        SpaceMode::LabeledTrees { n } => {
            par_prufer_fold(
                n,
                budget,
                || TopGroups::new(objective, k),
                |top, seq, w| top.offer(w as f64, Some(w), 1, || encode(&prufer_decode(seq, n))),
                TopGroups::merge,
            )?
            .0
        }
        _ => {
            spec.par_fold(
                budget,
                || TopGroups::new(objective, k),
                |top, g| {
                    let kf = kf_cholesky(g).expect("connected members only");
                    top.offer(kf, None, 1, || encode(g));
                },
                TopGroups::merge,
            )?
            .0
        }
    };
    let mut groups = top.into_groups();
    // equal-ranked groups cannot occur, but keep graph6 as the final key
    groups.sort_by(|a, b| {
        let ord = match (a.wiener, b.wiener) {
            (Some(x), Some(y)) => x.cmp(&y),
            _ => a.kf.partial_cmp(&b.kf).unwrap_or(Ordering::Equal),
        };
        let ord = if objective == Objective::Max { ord.reverse() } else { ord };
        ord.then_with(|| a.graph6.cmp(&b.graph6))
    });
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(i, g)| SearchHit { rank: i + 1, kf: g.kf, wiener: g.wiener, graph6: g.graph6, count: g.count })
        .collect())
}
