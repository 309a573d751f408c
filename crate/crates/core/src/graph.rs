//! Immutable simple graphs with bit-set adjacency rows.
//!
//! A [`Graph`] is a value: edits return fresh graphs, so predicates compose
//! without aliasing hazards and scans can fan out across threads freely.
//! Row `i` of the adjacency is `N(i)` as a [`VertexSet`]; symmetry and
//! irreflexivity are maintained by construction.

use crate::bitset::{VertexSet, MAX_VERTICES};
use std::fmt;

/// Vertex index into a graph's `0..n` range.
pub type Vertex = usize;

/// Simple undirected graph on vertices `0..n`, `n <= 512`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex capacity is {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![VertexSet::empty(); n],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let full = VertexSet::all_below(n);
        for v in 0..n {
            let mut row = full;
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.set_edge(n - 1, 0);
        g
    }

    /// Complete bipartite graph with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Graph from an explicit edge list.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.set_edge(u, v);
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    fn set_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert!(u != v, "loops are not representable");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, lexicographic.
    pub fn missing_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// New graph with edge `{u, v}` added.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.set_edge(u, v);
        g
    }

    /// New graph with edge `{u, v}` removed.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        assert!(u < self.n && v < self.n, "vertex out of range");
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// Induced subgraph on `verts`, reindexed to `0..verts.len()`
    /// preserving the ascending vertex order.
    pub fn induced_subgraph(&self, verts: &VertexSet) -> Graph {
        let keep = verts.to_vec();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabeled copy: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Complement graph: `{u, v}` is an edge iff it is not one here.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let mut row = full - self.adj[v];
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// `N(S)`: union of open neighborhoods over `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for v in s.iter() {
            out |= self.adj[v];
        }
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.neighborhood_of_set(s) | *s
    }

    /// Connected components of the subgraph induced on `mask`, in the
    /// original labels, ordered by smallest member.
    pub fn components_within(&self, mask: &VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = *mask;
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let grown = (self.neighborhood_of_set(&frontier) & *mask) - comp;
                comp |= grown;
                frontier = grown;
            }
            remaining -= comp;
            out.push(comp);
        }
        out
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Structural self-check of the adjacency invariants; used by tests.
    pub fn validate(&self) -> Result<(), String> {
        if self.adj.len() != self.n {
            return Err("adjacency row count differs from n".into());
        }
        let valid = self.vertex_set();
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return Err(format!("loop at vertex {u}"));
            }
            if !self.adj[u].is_subset_of(&valid) {
                return Err(format!("row {u} has bits at or above n"));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(format!("asymmetric pair ({u}, {v})"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Whether an unordered pair is an edge or a missing edge of some graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PairKind {
    Edge,
    MissingEdge,
}

/// Unordered vertex pair `u < v`, tagged by its status in the graph it
/// was derived from.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexPair {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: PairKind,
}

impl VertexPair {
    /// Classify the pair `{u, v}` against `g`.
    pub fn of(g: &Graph, u: Vertex, v: Vertex) -> VertexPair {
        assert!(u != v, "a pair needs two distinct vertices");
        assert!(u < g.n() && v < g.n(), "vertex out of range");
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let kind = if g.has_edge(u, v) {
            PairKind::Edge
        } else {
            PairKind::MissingEdge
        };
        VertexPair { u, v, kind }
    }

    pub fn is_edge(&self) -> bool {
        self.kind == PairKind::Edge
    }

    pub fn contains(&self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint other than `w`; panics if `w` is not an endpoint.
    pub fn other(&self, w: Vertex) -> Vertex {
        if w == self.u {
            self.v
        } else if w == self.v {
            self.u
        } else {
            panic!("{w} is not an endpoint of {self}")
        }
    }

    pub fn as_set(&self) -> VertexSet {
        VertexSet::from_iter([self.u, self.v])
    }
}

/// Pairs order by endpoints only, so edges and missing edges interleave
/// consistently in reports.
impl PartialOrd for VertexPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.u, self.v).cmp(&(other.u, other.v))
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Serializes as the two-element array `[u, v]`.
impl serde::Serialize for VertexPair {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq([self.u, self.v])
    }
}

impl fmt::Debug for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self, self.kind)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_edge_counts() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        assert_eq!(Graph::path(4).edge_count(), 3);
        assert_eq!(Graph::complete_bipartite(2, 3).edge_count(), 6);
        assert_eq!(Graph::empty(7).edge_count(), 0);
        Graph::complete(4).validate().unwrap();
    }

    #[test]
    fn complement_of_complete_is_empty() {
        assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    }

    #[test]
    fn complement_of_c5_is_c5_relabeled() {
        // 0-1-2-3-4-0 complements to the pentagram 0-2-4-1-3-0.
        let c5 = Graph::cycle(5);
        let expect = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(c5.complement(), expect);
    }

    #[test]
    fn complement_of_k23_is_two_cliques() {
        let g = Graph::complete_bipartite(2, 3);
        let expect = Graph::complete(2).disjoint_union(&Graph::complete(3));
        assert_eq!(g.complement(), expect);
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (0, 5)]);
        assert_eq!(g.complement().complement(), g);
        let n = g.n();
        assert_eq!(
            g.edge_count() + g.complement().edge_count(),
            n * (n - 1) / 2
        );
    }

    #[test]
    fn closed_neighborhood_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            c5.closed_neighborhood(&VertexSet::singleton(0)).to_vec(),
            vec![0, 1, 4]
        );
        assert!(c5.closed_neighborhood(&VertexSet::empty()).is_empty());
        let k4 = Graph::complete(4);
        assert_eq!(
            k4.closed_neighborhood(&VertexSet::singleton(2)).to_vec(),
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn components_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);

        assert_eq!(Graph::cycle(5).components().len(), 1);
        assert_eq!(Graph::empty(3).components().len(), 3);
        assert_eq!(Graph::empty(0).components().len(), 0);
    }

    #[test]
    fn edits_preserve_symmetry() {
        let g = Graph::cycle(5).with_edge(0, 2).without_edge(1, 2);
        g.validate().unwrap();
        assert!(g.has_edge(0, 2));
        assert!(!g.has_edge(1, 2));
        // Original untouched.
        assert!(Graph::cycle(5).has_edge(1, 2));
    }

    #[test]
    fn induced_subgraph_reindexes() {
        let c5 = Graph::cycle(5);
        let sub = c5.induced_subgraph(&VertexSet::from_iter([0, 1, 3]));
        assert_eq!(sub.n(), 3);
        // Kept vertices 0,1,3 -> 0,1,2; only edge among them is 0-1.
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn vertex_pair_classification() {
        let c5 = Graph::cycle(5);
        let e = VertexPair::of(&c5, 1, 0);
        assert_eq!((e.u, e.v), (0, 1));
        assert!(e.is_edge());
        let m = VertexPair::of(&c5, 2, 0);
        assert_eq!(m.kind, PairKind::MissingEdge);
        assert_eq!(m.other(0), 2);
        assert!(m.contains(2) && !m.contains(1));
    }
}
