//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! A [`Graph`] is an immutable value: a vertex count and a sorted, duplicate
//! free list of pairs `(u, v)` with `u < v`. Every editing operation returns a
//! new graph. Neighbor structures are built on demand.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Whether [`Graph::edit_edge`] inserts or deletes the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeEdit {
    Add,
    Remove,
}

/// How [`Graph::combine`] glues two graphs together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combine {
    /// Disjoint union; the second graph's labels are shifted by `n₁`.
    Union,
    /// Disjoint union plus every edge between the two vertex sets.
    Join,
}

/// A shortest-path distance, or the explicit marker for another component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("UNREACHABLE"),
        }
    }
}

/// Breadth-first distances from one source vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Distance>,
}

/// Degree sequence summary plus connectivity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
    pub connected: bool,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `u < v` and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list })
    }

    /// Caller guarantees the pairs are sorted, unique, in range and `u < v`.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < n));
        Graph { n, edges }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Edge present in the result iff absent here; `n` preserved.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.size());
        let mut present = self.edges.iter().peekable();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if present.peek() == Some(&&(u, v)) {
                    present.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Inserts or deletes exactly one edge.
    pub fn edit_edge(&self, u: usize, v: usize, mode: EdgeEdit) -> Result<Graph> {
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(Error::VertexOutOfRange { vertex, n: self.n });
            }
        }
        let pair = (u.min(v), u.max(v));
        let mut edges = self.edges.clone();
        match (mode, edges.binary_search(&pair)) {
            (EdgeEdit::Add, Err(pos)) => edges.insert(pos, pair),
            (EdgeEdit::Add, Ok(_)) => return Err(Error::EdgeAlreadyPresent(pair.0, pair.1)),
            (EdgeEdit::Remove, Ok(pos)) => {
                edges.remove(pos);
            }
            (EdgeEdit::Remove, Err(_)) => return Err(Error::EdgeAbsent(pair.0, pair.1)),
        }
        Ok(Graph { n: self.n, edges })
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.edit_edge(u, v, EdgeEdit::Add)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.edit_edge(u, v, EdgeEdit::Remove)
    }

    pub fn combine(&self, other: &Graph, mode: Combine) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        if mode == Combine::Join {
            for u in 0..self.n {
                for v in 0..other.n {
                    edges.push((u, v + shift));
                }
            }
        }
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        Graph { n: self.n + other.n, edges }
    }

    /// Identifies vertex `at_other` of `other` with vertex `at_self` of `self`.
    ///
    /// Vertices of `self` keep their labels; the remaining vertices of `other`
    /// follow in their original order. The shared vertex is `at_self`.
    pub fn glue(&self, at_self: usize, other: &Graph, at_other: usize) -> Result<Graph> {
        if at_self >= self.n {
            return Err(Error::VertexOutOfRange { vertex: at_self, n: self.n });
        }
        if at_other >= other.n {
            return Err(Error::VertexOutOfRange { vertex: at_other, n: other.n });
        }
        let relabel = |v: usize| match v.cmp(&at_other) {
            std::cmp::Ordering::Equal => at_self,
            std::cmp::Ordering::Less => self.n + v,
            std::cmp::Ordering::Greater => self.n + v - 1,
        };
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (relabel(u), relabel(v))));
        Graph::new(self.n + other.n - 1, edges)
    }

    /// Applies `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::MalformedInput(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn shortest_paths(&self, source: usize) -> Result<DistanceRow> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange { vertex: source, n: self.n });
        }
        Ok(bfs(&self.neighbors(), source))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        DegreeStats {
            max: degrees.iter().copied().max().unwrap_or(0),
            min: degrees.iter().copied().min().unwrap_or(0),
            connected: self.is_connected(),
            degrees,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Number of connected components; the empty graph on zero vertices has none.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = self.n;
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    /// Edges whose removal keeps the graph connected (edges lying on a cycle).
    pub fn non_cut_edges(&self) -> Vec<(usize, usize)> {
        let base = self.component_count();
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let g = self.without_edge(u, v).expect("edge taken from the edge list");
                g.component_count() == base
            })
            .collect()
    }

    /// Length of the shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.neighbors();
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            let mut queue = VecDeque::from([s]);
            dist[s] = 0;
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

pub(crate) fn bfs(adj: &[Vec<usize>], source: usize) -> DistanceRow {
    let mut dist = vec![Distance::Unreachable; adj.len()];
    dist[source] = Distance::Finite(0);
    let mut queue = VecDeque::from([(source, 0usize)]);
    while let Some((u, d)) = queue.pop_front() {
        for &w in &adj[u] {
            if dist[w] == Distance::Unreachable {
                dist[w] = Distance::Finite(d + 1);
                queue.push_back((w, d + 1));
            }
        }
    }
    DistanceRow { source, dist }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}
