//! Structural predicates used to recognise extremal graphs without a
//! general isomorphism routine.

use std::fmt;

use crate::families::FamilySpec;
use crate::graph::Graph;

/// The three small deleted patterns that are neither matchings nor stars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedPattern {
    /// `K_{1,2} ∪ K₂`
    StarPlusEdge,
    P4,
    Triangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComplementShape {
    Empty,
    Matching(usize),
    Star(usize),
    Pattern(NamedPattern),
    Other,
}

impl ComplementShape {
    /// Index `i` of `G_i(n)` when the complement is one of its patterns.
    pub fn catalog_index(self) -> Option<usize> {
        match self {
            ComplementShape::Empty => Some(1),
            ComplementShape::Matching(1) => Some(2),
            ComplementShape::Matching(2) => Some(3),
            ComplementShape::Star(2) => Some(4),
            ComplementShape::Matching(3) => Some(5),
            ComplementShape::Pattern(NamedPattern::StarPlusEdge) => Some(6),
            ComplementShape::Pattern(NamedPattern::P4) => Some(7),
            ComplementShape::Pattern(NamedPattern::Triangle) => Some(8),
            ComplementShape::Star(3) => Some(9),
            _ => None,
        }
    }
}

impl fmt::Display for ComplementShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplementShape::Empty => write!(f, "EMPTY"),
            ComplementShape::Matching(p) => write!(f, "MATCHING({p})"),
            ComplementShape::Star(p) => write!(f, "STAR({p})"),
            ComplementShape::Pattern(NamedPattern::StarPlusEdge) => write!(f, "PATTERN(K1,2+K2)"),
            ComplementShape::Pattern(NamedPattern::P4) => write!(f, "PATTERN(P4)"),
            ComplementShape::Pattern(NamedPattern::Triangle) => write!(f, "PATTERN(C3)"),
            ComplementShape::Other => write!(f, "OTHER"),
        }
    }
}

/// Classifies the complement of `g` with its isolated vertices dropped.
pub fn complement_shape(g: &Graph) -> ComplementShape {
    let comp = g.complement();
    let m = comp.size();
    if m == 0 {
        return ComplementShape::Empty;
    }
    let mut degrees: Vec<usize> = comp.degrees().into_iter().filter(|&d| d > 0).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    if degrees[0] == 1 {
        return ComplementShape::Matching(m);
    }
    if degrees[0] == m && degrees[1..].iter().all(|&d| d == 1) {
        return ComplementShape::Star(m);
    }
    match degrees.as_slice() {
        [2, 1, 1, 1, 1] => ComplementShape::Pattern(NamedPattern::StarPlusEdge),
        [2, 2, 1, 1] => ComplementShape::Pattern(NamedPattern::P4),
        [2, 2, 2] => ComplementShape::Pattern(NamedPattern::Triangle),
        _ => ComplementShape::Other,
    }
}

/// Shape of a tree by its branching vertices (degree ≥ 3).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeShape {
    Path,
    /// Branch lengths, non-increasing.
    Starlike(Vec<usize>),
    /// Tail lengths at the two branching vertices, each non-increasing, the
    /// pair ordered by (tail count, total, lexicographic). `interior` is the
    /// number of vertices strictly inside the central path.
    DoubleBranch { first: Vec<usize>, second: Vec<usize>, interior: usize },
    Other,
}

impl TreeShape {
    pub fn family(&self, n: usize) -> Option<FamilySpec> {
        match self {
            TreeShape::Path => Some(FamilySpec::Path(n)),
            TreeShape::Starlike(b) => Some(FamilySpec::Starlike { n, branches: b.clone() }),
            TreeShape::DoubleBranch { first, second, .. } => {
                Some(FamilySpec::DoubleBranch { n, first: first.clone(), second: second.clone() })
            }
            TreeShape::Other => None,
        }
    }

    pub fn from_family(spec: &FamilySpec) -> Option<TreeShape> {
        spec.build().ok().and_then(|g| tree_shape(&g))
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            TreeShape::Path => write!(f, "path"),
            TreeShape::Starlike(b) => write!(f, "starlike({})", join(b)),
            TreeShape::DoubleBranch { first, second, .. } => {
                write!(f, "double-branch({};{})", join(first), join(second))
            }
            TreeShape::Other => write!(f, "other"),
        }
    }
}

/// Length of the branch entering `start` from `from`; stops at the next
/// branching vertex, which is returned alongside when reached.
fn walk(adj: &[Vec<usize>], from: usize, start: usize) -> (usize, Option<usize>) {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        match adj[cur].len() {
            1 => return (len, None),
            2 => {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return (len - 1, Some(cur)),
        }
    }
}

/// `None` when `g` is not a tree.
pub fn tree_shape(g: &Graph) -> Option<TreeShape> {
    if !g.is_tree() {
        return None;
    }
    let adj = g.neighbors();
    let branching: Vec<usize> = (0..g.order()).filter(|&v| adj[v].len() >= 3).collect();
    let sorted_desc = |mut xs: Vec<usize>| {
        xs.sort_unstable_by(|a, b| b.cmp(a));
        xs
    };
    Some(match branching.as_slice() {
        [] => TreeShape::Path,
        [c] => TreeShape::Starlike(sorted_desc(adj[*c].iter().map(|&s| walk(&adj, *c, s).0).collect())),
        [a, b] => {
            let tails = |x: usize| {
                let mut interior = 0;
                let mut out = Vec::new();
                for &s in &adj[x] {
                    match walk(&adj, x, s) {
                        (len, Some(_)) => interior = len,
                        (len, None) => out.push(len),
                    }
                }
                (sorted_desc(out), interior)
            };
            let (ta, interior) = tails(*a);
            let (tb, _) = tails(*b);
            let key = |t: &Vec<usize>| (t.len(), t.iter().sum::<usize>(), t.clone());
            let (first, second) = if key(&ta) <= key(&tb) { (ta, tb) } else { (tb, ta) };
            TreeShape::DoubleBranch { first, second, interior }
        }
        _ => TreeShape::Other,
    })
}

/// A bijection `perm` with `g.relabel(perm) == h`, by backtracking over
/// degree-compatible candidates. Exponential in the worst case; intended for
/// the small orders of exhaustive runs.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    backtrack(g, h, &mut |map| {
        found = Some(map.to_vec());
        false
    });
    found
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Size of the automorphism group; `n!/|Aut|` labeled copies of `g` exist.
pub fn automorphism_count(g: &Graph) -> u64 {
    let mut count = 0;
    backtrack(g, g, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Calls `visit` on each isomorphism until it returns false.
fn backtrack(g: &Graph, h: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.order();
    if n != h.order() || g.size() != h.size() || n > 64 {
        return;
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let mut sg = dg.clone();
    let mut sh = dh.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return;
    }
    let rows = |x: &Graph| {
        let mut r = vec![0u64; n];
        for &(u, v) in x.edges() {
            r[u] |= 1 << v;
            r[v] |= 1 << u;
        }
        r
    };
    let (rg, rh) = (rows(g), rows(h));
    // high-degree vertices first, then neighbours of already placed ones
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let pick = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((rg[v] & placed).count_ones(), dg[v], std::cmp::Reverse(v)))
            .unwrap();
        order.push(pick);
        placed |= 1 << pick;
    }

    struct Ctx<'a> {
        order: &'a [usize],
        rg: &'a [u64],
        rh: &'a [u64],
        dg: &'a [usize],
        dh: &'a [usize],
    }

    fn extend(depth: usize, ctx: &Ctx, map: &mut [usize], used: &mut u64, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == ctx.order.len() {
            return visit(map);
        }
        let v = ctx.order[depth];
        for w in 0..ctx.rh.len() {
            if *used >> w & 1 == 1 || ctx.dh[w] != ctx.dg[v] {
                continue;
            }
            let consistent = ctx.order[..depth]
                .iter()
                .all(|&u| (ctx.rg[v] >> u & 1) == (ctx.rh[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            let go_on = extend(depth + 1, ctx, map, used, visit);
            *used &= !(1 << w);
            if !go_on {
                return false;
            }
        }
        true
    }

    let ctx = Ctx { order: &order, rg: &rg, rh: &rh, dg: &dg, dh: &dh };
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(0, &ctx, &mut map, &mut used, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus(n: usize, pairs: &[(usize, usize)]) -> Graph {
        let mut g = Graph::complete(n);
        for &(u, v) in pairs {
            g = g.without_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_shape(&minus(6, &[(0, 1), (2, 3), (4, 5)])), ComplementShape::Matching(3));
        assert_eq!(complement_shape(&minus(6, &[(0, 1), (0, 2)])), ComplementShape::Star(2));
        assert_eq!(complement_shape(&Graph::complete(5)), ComplementShape::Empty);
        assert_eq!(complement_shape(&minus(6, &[(0, 1)])), ComplementShape::Matching(1));
        assert_eq!(complement_shape(&minus(7, &[(3, 1), (1, 5), (5, 6)])), ComplementShape::Pattern(NamedPattern::P4));
        assert_eq!(complement_shape(&minus(7, &[(0, 1), (0, 2), (1, 2), (4, 5)])), ComplementShape::Other);
    }

    #[test]
    fn catalog_graphs_classify_to_their_index() {
        for i in 1..=9 {
            let g = FamilySpec::Catalog { n: 9, i }.build().unwrap();
            assert_eq!(complement_shape(&g).catalog_index(), Some(i));
        }
    }

    #[test]
    fn tree_shapes() {
        let shape = |s: &str| tree_shape(&s.parse::<FamilySpec>().unwrap().build().unwrap()).unwrap();
        assert_eq!(shape("path:6"), TreeShape::Path);
        assert_eq!(shape("starlike:10,(5,3,1)"), TreeShape::Starlike(vec![5, 3, 1]));
        assert_eq!(
            shape("double-branch:10,(2,1),(1,1)"),
            TreeShape::DoubleBranch { first: vec![1, 1], second: vec![2, 1], interior: 3 }
        );
        assert_eq!(shape("double-branch:6,(1,1),(1,1)").to_string(), "double-branch(1,1;1,1)");
        let spider = Graph::new(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6)]).unwrap();
        assert_eq!(tree_shape(&spider), Some(TreeShape::DoubleBranch { first: vec![1, 1], second: vec![2, 1], interior: 0 }));
        let three = Graph::new(10, [(0, 1), (1, 2), (0, 3), (0, 4), (1, 5), (2, 6), (2, 7), (5, 8), (8, 9)]).unwrap();
        assert_eq!(tree_shape(&three), Some(TreeShape::Other));
        assert_eq!(tree_shape(&Graph::complete(3)), None);
    }

    #[test]
    fn shape_family_round_trip() {
        for s in ["starlike:9,(4,3,1)", "double-branch:9,(1,1),(2,1)", "path:9"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(TreeShape::from_family(&spec).unwrap().family(9), Some(spec));
        }
    }

    #[test]
    fn isomorphism_search() {
        let g = "lollipop:8,3".parse::<FamilySpec>().unwrap().build().unwrap();
        let perm = [5, 2, 7, 0, 3, 1, 6, 4];
        let h = g.relabel(&perm).unwrap();
        let found = find_isomorphism(&g, &h).unwrap();
        assert_eq!(g.relabel(&found).unwrap(), h);
        let other = "lollipop:8,4".parse::<FamilySpec>().unwrap().build().unwrap();
        assert!(!is_isomorphic(&g, &other));
        let q = "q3:8".parse::<FamilySpec>().unwrap().build().unwrap();
        let r = "r3:8".parse::<FamilySpec>().unwrap().build().unwrap();
        assert!(!is_isomorphic(&q, &r));
    }

    #[test]
    fn automorphism_counts() {
        let build = |s: &str| s.parse::<FamilySpec>().unwrap().build().unwrap();
        assert_eq!(automorphism_count(&build("lollipop:8,3")), 2);
        assert_eq!(automorphism_count(&build("cycle:7")), 14);
        assert_eq!(automorphism_count(&Graph::complete(5)), 120);
        assert_eq!(automorphism_count(&build("dumbbell:3,3,3")), 8);
        assert_eq!(automorphism_count(&build("star:6")), 120);
    }
}
