//! Labeled enumeration spaces: edge subsets of `Kₙ` and Prüfer sequences.
//!
//! Every space is indexed `0..cardinality`, so work can be split into
//! disjoint index blocks and visited independently.

use std::ops::Range;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpaceMode {
    /// `Kₙ` with every `p`-subset of its edges removed.
    DeletedEdges { n: usize, p: usize },
    /// The tree decoded from each of the `nⁿ⁻²` Prüfer sequences.
    LabeledTrees { n: usize },
    /// Every `m`-subset of the edges of `Kₙ` that spans a connected graph.
    ConnectedWithEdges { n: usize, m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationSpec {
    pub mode: SpaceMode,
    /// Skip disconnected members. Always on for the connected-subset space.
    pub connected_only: bool,
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    binomial(n as u64, k as u64).to_u64().unwrap_or(u64::MAX)
}

impl EnumerationSpec {
    pub fn deleted_edges(n: usize, p: usize) -> Self {
        EnumerationSpec { mode: SpaceMode::DeletedEdges { n, p }, connected_only: true }
    }

    pub fn labeled_trees(n: usize) -> Self {
        EnumerationSpec { mode: SpaceMode::LabeledTrees { n }, connected_only: true }
    }

    pub fn connected_with_edges(n: usize, m: usize) -> Self {
        EnumerationSpec { mode: SpaceMode::ConnectedWithEdges { n, m }, connected_only: true }
    }

    pub fn order(&self) -> usize {
        match self.mode {
            SpaceMode::DeletedEdges { n, .. }
            | SpaceMode::LabeledTrees { n }
            | SpaceMode::ConnectedWithEdges { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let pairs = |n: usize| n * n.saturating_sub(1) / 2;
        match self.mode {
            SpaceMode::DeletedEdges { n, p } if p > pairs(n) => Err(Error::ParamOutOfRange(format!(
                "cannot delete {p} edges from K_{n}, which has {}",
                pairs(n)
            ))),
            SpaceMode::ConnectedWithEdges { n, m } if m > pairs(n) => Err(Error::ParamOutOfRange(
                format!("K_{n} has only {} edges, asked for {m}", pairs(n)),
            )),
            SpaceMode::LabeledTrees { n } if n < 2 => {
                Err(Error::ParamOutOfRange(format!("tree space needs n ≥ 2, got {n}")))
            }
            _ if self.order() > crate::graph6::MAX_ORDER => Err(Error::ParamOutOfRange(format!(
                "n = {} exceeds {}",
                self.order(),
                crate::graph6::MAX_ORDER
            ))),
            _ => Ok(()),
        }
    }

    /// Size of the index space, before any connectivity filtering.
    pub fn cardinality(&self) -> BigUint {
        let pairs = |n: usize| (n * n.saturating_sub(1) / 2) as u64;
        match self.mode {
            SpaceMode::DeletedEdges { n, p } => binomial(pairs(n), p as u64),
            SpaceMode::ConnectedWithEdges { n, m } => binomial(pairs(n), m as u64),
            SpaceMode::LabeledTrees { n } => BigUint::from(n).pow(n as u32 - 2),
        }
    }

    /// Validates and returns the cardinality when it fits the budget.
    pub fn check_budget(&self, budget: u64) -> Result<u64> {
        self.validate()?;
        let cardinality = self.cardinality();
        match cardinality.to_u64() {
            Some(c) if c <= budget => Ok(c),
            _ => Err(Error::BudgetExceeded { cardinality, budget }),
        }
    }

    /// Sequential stream over the whole space.
    pub fn graphs(&self, budget: u64) -> Result<impl Iterator<Item = Graph>> {
        let total = self.check_budget(budget)?;
        let spec = *self;
        let mut cursor = Cursor::new(&spec, 0..total);
        Ok(std::iter::from_fn(move || cursor.next_graph()))
    }

    /// Disjoint index blocks covering the space.
    pub fn blocks(&self, budget: u64, block_size: u64) -> Result<Vec<Range<u64>>> {
        let total = self.check_budget(budget)?;
        let size = block_size.max(1);
        Ok((0..total.div_ceil(size)).map(|b| b * size..((b + 1) * size).min(total)).collect())
    }

    /// Calls `f` on every (filtered) member with an index in `range`; returns how many.
    pub fn visit(&self, range: Range<u64>, mut f: impl FnMut(&Graph)) -> u64 {
        let mut cursor = Cursor::new(self, range);
        let mut count = 0;
        while let Some(g) = cursor.next_graph() {
            f(&g);
            count += 1;
        }
        count
    }

    /// Parallel fold over blocks; `merge` must be associative and
    /// order-independent for the result to be deterministic.
    pub fn par_fold<A, Id, Fold, Merge>(
        &self,
        budget: u64,
        identity: Id,
        fold: Fold,
        merge: Merge,
    ) -> Result<(A, u64)>
    where
        A: Send,
        Id: Fn() -> A + Sync + Send,
        Fold: Fn(&mut A, &Graph) + Sync + Send,
        Merge: Fn(A, A) -> A + Sync + Send,
    {
        let total = self.check_budget(budget)?;
        let block = block_size_for(total);
        let blocks = self.blocks(budget, block)?;
        let result = blocks
            .into_par_iter()
            .map(|range| {
                let mut acc = identity();
                let count = self.visit(range, |g| fold(&mut acc, g));
                (acc, count)
            })
            .reduce(|| (identity(), 0), |(a, ca), (b, cb)| (merge(a, b), ca + cb));
        Ok(result)
    }
}

pub(crate) fn block_size_for(total: u64) -> u64 {
    let workers = rayon::current_num_threads() as u64;
    (total / (workers * 32)).clamp(1024, 1 << 20)
}

/// Edges of `Kₙ` in lexicographic order.
pub fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The `k`-subset of `0..universe` with lexicographic rank `rank`.
pub fn unrank_subset(universe: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let block = binomial_u64(universe - next - 1, remaining);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Advances to the lexicographically next `k`-subset; false after the last.
pub fn next_subset(subset: &mut [usize], universe: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < universe - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Base-`n` digits of `index`, most significant first.
pub fn unrank_prufer(n: usize, mut index: u64) -> Vec<usize> {
    let len = n - 2;
    let mut seq = vec![0; len];
    for slot in seq.iter_mut().rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
    seq
}

pub fn next_prufer(seq: &mut [usize], n: usize) -> bool {
    for slot in seq.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Reusable buffers for Prüfer decoding.
#[derive(Debug, Clone, Default)]
pub struct PruferScratch {
    degree: Vec<usize>,
    size: Vec<u64>,
}

/// Decodes `seq` and returns the Wiener index, without building the tree.
/// Each removed leaf carries the size of the part of the tree already hung
/// below it, so the edge to its parent splits the vertices `s | n − s`.
pub fn prufer_wiener(seq: &[usize], n: usize, scratch: &mut PruferScratch) -> u64 {
    decode_with(seq, n, scratch, |_, _| {})
}

pub fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(n - 1);
    decode_with(seq, n, &mut PruferScratch::default(), |u, v| edges.push((u.min(v), u.max(v))));
    edges
}

pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    Graph::new(n, prufer_edges(seq, n)).expect("Prüfer decoding yields a tree")
}

fn decode_with(
    seq: &[usize],
    n: usize,
    scratch: &mut PruferScratch,
    mut edge: impl FnMut(usize, usize),
) -> u64 {
    let PruferScratch { degree, size } = scratch;
    degree.clear();
    degree.resize(n, 1);
    size.clear();
    size.resize(n, 1);
    for &v in seq {
        degree[v] += 1;
    }
    let total = n as u64;
    let mut wiener = 0;
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &v in seq {
        edge(leaf, v);
        let s = size[leaf];
        wiener += s * (total - s);
        size[v] += s;
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edge(leaf, n - 1);
    let s = size[leaf];
    wiener + s * (total - s)
}

/// Visits Prüfer sequences with ranks in `range`, passing each sequence and
/// its tree's Wiener index.
pub fn visit_prufer(n: usize, range: Range<u64>, mut f: impl FnMut(&[usize], u64)) {
    if range.is_empty() {
        return;
    }
    let mut seq = unrank_prufer(n, range.start);
    let mut scratch = PruferScratch::default();
    for _ in range {
        let w = prufer_wiener(&seq, n, &mut scratch);
        f(&seq, w);
        next_prufer(&mut seq, n);
    }
}

/// Parallel fold over the whole Prüfer space of order `n`, handing each
/// block's visitor the sequence and its Wiener index.
pub fn par_prufer_fold<A, Id, Fold, Merge>(
    n: usize,
    budget: u64,
    identity: Id,
    fold: Fold,
    merge: Merge,
) -> Result<(A, u64)>
where
    A: Send,
    Id: Fn() -> A + Sync + Send,
    Fold: Fn(&mut A, &[usize], u64) + Sync + Send,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    let spec = EnumerationSpec::labeled_trees(n);
    let total = spec.check_budget(budget)?;
    let blocks = spec.blocks(budget, block_size_for(total))?;
    let acc = blocks
        .into_par_iter()
        .map(|range| {
            let mut acc = identity();
            visit_prufer(n, range, |seq, w| fold(&mut acc, seq, w));
            acc
        })
        .reduce(&identity, &merge);
    Ok((acc, total))
}

fn is_connected_edges(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            components -= 1;
            if components == 1 {
                return true;
            }
        }
    }
    components == 1
}

struct Cursor {
    spec: EnumerationSpec,
    remaining: u64,
    all_edges: Vec<(usize, usize)>,
    subset: Vec<usize>,
    seq: Vec<usize>,
    started: bool,
}

impl Cursor {
    fn new(spec: &EnumerationSpec, range: Range<u64>) -> Self {
        let n = spec.order();
        let remaining = range.end.saturating_sub(range.start);
        let (all_edges, subset, seq) = match spec.mode {
            SpaceMode::DeletedEdges { p: k, .. } | SpaceMode::ConnectedWithEdges { m: k, .. } => {
                let all = complete_edges(n);
                let subset = if remaining > 0 { unrank_subset(all.len(), k, range.start) } else { Vec::new() };
                (all, subset, Vec::new())
            }
            SpaceMode::LabeledTrees { .. } => {
                let seq = if remaining > 0 { unrank_prufer(n, range.start) } else { Vec::new() };
                (Vec::new(), Vec::new(), seq)
            }
        };
        Cursor { spec: *spec, remaining, all_edges, subset, seq, started: false }
    }

    fn advance(&mut self) {
        match self.spec.mode {
            SpaceMode::LabeledTrees { n } => {
                next_prufer(&mut self.seq, n);
            }
            _ => {
                next_subset(&mut self.subset, self.all_edges.len());
            }
        }
    }

    fn next_graph(&mut self) -> Option<Graph> {
        loop {
            if self.remaining == 0 {
                return None;
            }
            if self.started {
                self.advance();
            }
            self.started = true;
            self.remaining -= 1;
            let n = self.spec.order();
            let graph = match self.spec.mode {
                SpaceMode::LabeledTrees { n } => Some(prufer_decode(&self.seq, n)),
                SpaceMode::ConnectedWithEdges { .. } => {
                    let edges = self.subset.iter().map(|&i| self.all_edges[i]);
                    is_connected_edges(n, edges.clone())
                        .then(|| Graph::from_sorted_unchecked(n, edges.collect()))
                }
                SpaceMode::DeletedEdges { .. } => {
                    let mut kept = Vec::with_capacity(self.all_edges.len() - self.subset.len());
                    let mut skip = self.subset.iter().peekable();
                    for (i, &e) in self.all_edges.iter().enumerate() {
                        if skip.peek() == Some(&&i) {
                            skip.next();
                        } else {
                            kept.push(e);
                        }
                    }
                    (!self.spec.connected_only || is_connected_edges(n, kept.iter().copied()))
                        .then(|| Graph::from_sorted_unchecked(n, kept))
                }
            };
            if graph.is_some() {
                return graph;
            }
        }
    }
}
