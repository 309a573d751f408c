//! Exact graph kernels for small-graph criticality verification.
//!
//! Everything here operates on immutable simple graphs of at most 512
//! vertices stored as per-vertex bit-sets. The modules layer up from raw
//! set algebra to the structural predicates used by the verification
//! harness: distance/diameter kernels, exact (total) domination numbers,
//! edge-criticality predicates, the quasi-edge association machinery for
//! vertex partitions, vertex-connectivity analysis, and isomorph-free
//! enumeration of all graphs of a given order.

pub mod bitset;
pub mod criticality;
pub mod domination;
pub mod enumerate;
pub mod g6;
pub mod graph;
pub mod metrics;
pub mod partition;
pub mod structure;

pub use bitset::VertexSet;
pub use graph::{Graph, PairKind, Vertex, VertexPair};
pub use metrics::Distance;
