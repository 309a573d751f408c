//! Exact domination and total domination.
//!
//! Numbers come from a cardinality-ascending branch-and-cover search: at
//! each step the lowest-indexed uncovered vertex forces the next pick into
//! its (closed or open) neighborhood, which keeps the search exact and
//! fast at the orders scanned here. No heuristics anywhere.

use crate::bitset::VertexSet;
use crate::graph::{Graph, PairKind, Vertex, VertexPair};
use crate::metrics::{diameter, Distance};
use serde::{Serialize, Serializer};
use std::fmt;

/// Which neighborhood a dominating set must cover `V` with.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DominationKind {
    /// `N[S] = V`: ordinary domination.
    Closed,
    /// `N(S) = V`: total domination.
    Total,
}

/// γ or γt: a positive count, or `Infinite` for total domination in the
/// presence of an isolated vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DominationNumber {
    Finite(u32),
    Infinite,
}

impl DominationNumber {
    pub fn finite(self) -> Option<u32> {
        match self {
            DominationNumber::Finite(k) => Some(k),
            DominationNumber::Infinite => None,
        }
    }
}

impl fmt::Display for DominationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationNumber::Finite(k) => write!(f, "{k}"),
            DominationNumber::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as numbers, `Infinite` as `null`.
impl Serialize for DominationNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(serializer)
    }
}

fn coverage(g: &Graph, v: Vertex, kind: DominationKind) -> VertexSet {
    match kind {
        DominationKind::Closed => g.closed_neighbors(v),
        DominationKind::Total => *g.neighbors(v),
    }
}

/// Does `s` dominate (`Closed`) or totally dominate (`Total`) all of `V`?
pub fn dominates(g: &Graph, s: &VertexSet, kind: DominationKind) -> bool {
    let covered = match kind {
        DominationKind::Closed => g.closed_neighborhood(s),
        DominationKind::Total => g.neighborhood_of_set(s),
    };
    covered == g.vertex_set()
}

fn search(g: &Graph, kind: DominationKind, covered: VertexSet, budget: u32) -> bool {
    let all = g.vertex_set();
    if covered == all {
        return true;
    }
    if budget == 0 {
        return false;
    }
    // Any solution must cover the first uncovered vertex, so branch only
    // over vertices able to do that.
    let u = (all - covered).min().expect("uncovered vertex exists");
    let candidates = match kind {
        DominationKind::Closed => g.closed_neighbors(u),
        DominationKind::Total => *g.neighbors(u),
    };
    for v in candidates.iter() {
        if search(g, kind, covered | coverage(g, v, kind), budget - 1) {
            return true;
        }
    }
    false
}

fn exists_of_size(g: &Graph, kind: DominationKind, k: u32) -> bool {
    search(g, kind, VertexSet::empty(), k)
}

/// Exact γ (Closed) or γt (Total) by increasing-cardinality search.
///
/// Total domination of a graph with an isolated vertex is `Infinite`.
/// The zero-vertex graph yields `Finite(0)`; the harness never feeds it.
pub fn domination_number(g: &Graph, kind: DominationKind) -> DominationNumber {
    let n = g.n();
    if n == 0 {
        return DominationNumber::Finite(0);
    }
    if kind == DominationKind::Total && (0..n).any(|v| g.degree(v) == 0) {
        return DominationNumber::Infinite;
    }
    for k in 1..=n as u32 {
        if exists_of_size(g, kind, k) {
            return DominationNumber::Finite(k);
        }
    }
    unreachable!("V itself dominates once isolated vertices are excluded")
}

/// γt, the number this toolkit revolves around.
pub fn total_domination_number(g: &Graph) -> DominationNumber {
    domination_number(g, DominationKind::Total)
}

/// Lexicographically least edge `{x, y}` with `N[{x, y}] = V`, if any.
pub fn adjacent_dominating_pair(g: &Graph) -> Option<VertexPair> {
    debug_assert!(g.n() >= 2, "needs a nontrivial graph");
    let all = g.vertex_set();
    for (u, v) in g.edges() {
        if (g.closed_neighbors(u) | g.closed_neighbors(v)) == all {
            return Some(VertexPair {
                u,
                v,
                kind: PairKind::Edge,
            });
        }
    }
    None
}

/// One instance of the duality between adjacent dominating pairs and the
/// complement's diameter: a nontrivial graph is dominated by two adjacent
/// vertices exactly when `diam(G^c) > 2`. Returns whether the two sides
/// agree on `g`, so `true` certifies the instance.
pub fn duality_check(g: &Graph) -> bool {
    assert!(g.n() >= 2, "duality needs a nontrivial graph");
    let has_pair = adjacent_dominating_pair(g).is_some();
    let complement_diam = diameter(&g.complement());
    has_pair == (complement_diam > Distance::Finite(2))
}
