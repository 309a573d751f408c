//! Distance and diameter kernels.
//!
//! Breadth-first search over bit-set frontiers; distances are an explicit
//! finite/infinite sum so that `∞` takes part in comparisons the way the
//! usual convention wants (`diam(G) = ∞` exactly when `G` is disconnected).
//! Graphs are tiny here, so nothing is cached.

use crate::graph::{Graph, Vertex};
use serde::{Serialize, Serializer};
use std::fmt;

/// A shortest-path length: finite hop count or unreachable.
///
/// `Finite(a) < Finite(b)` by value and every `Finite` compares below
/// `Infinite`, which the derived ordering gives for free.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Distance::Infinite
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite distances serialize as numbers, `Infinite` as `null`.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(serializer)
    }
}

/// Exact shortest-path length between `u` and `v`.
///
/// Panics if either vertex is out of range.
pub fn distance(g: &Graph, u: Vertex, v: Vertex) -> Distance {
    assert!(u < g.n() && v < g.n(), "vertex out of range");
    let mut visited = crate::VertexSet::singleton(u);
    let mut frontier = visited;
    let mut d = 0u32;
    loop {
        if visited.contains(v) {
            return Distance::Finite(d);
        }
        let grown = g.neighborhood_of_set(&frontier) - visited;
        if grown.is_empty() {
            return Distance::Infinite;
        }
        visited |= grown;
        frontier = grown;
        d += 1;
    }
}

/// Maximum distance from `v` to any vertex.
pub fn eccentricity(g: &Graph, v: Vertex) -> Distance {
    assert!(v < g.n(), "vertex out of range");
    let all = g.vertex_set();
    let mut visited = crate::VertexSet::singleton(v);
    let mut frontier = visited;
    let mut d = 0u32;
    loop {
        if visited == all {
            return Distance::Finite(d);
        }
        let grown = g.neighborhood_of_set(&frontier) - visited;
        if grown.is_empty() {
            return Distance::Infinite;
        }
        visited |= grown;
        frontier = grown;
        d += 1;
    }
}

/// Maximum distance over all vertex pairs; `Infinite` iff disconnected.
///
/// Panics on the zero-vertex graph, whose diameter is undefined.
pub fn diameter(g: &Graph) -> Distance {
    assert!(g.n() >= 1, "diameter needs at least one vertex");
    let mut best = Distance::Finite(0);
    for v in 0..g.n() {
        match eccentricity(g, v) {
            Distance::Infinite => return Distance::Infinite,
            d => best = best.max(d),
        }
    }
    best
}
