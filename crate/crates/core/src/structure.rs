//! Vertex connectivity, independent cuts, and structural claim checkers.
//!
//! Connectivity is exact via vertex-split max-flow over all non-adjacent
//! pairs; cut enumeration is exhaustive with a hard order cap and refuses
//! rather than sampling. The claim checkers validate only what they need
//! to run (distinct in-range vertices, an actual separation); criticality
//! and minimality of the cut are the scanning harness's job, which is
//! what lets the tests exercise planted violations.

use crate::bitset::VertexSet;
use crate::criticality::is_three_gt_critical;
use crate::graph::{Graph, Vertex};
use serde::Serialize;
use thiserror::Error;

/// Exhaustive cut enumeration is capped at this order.
pub const CUT_ENUM_MAX: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex arguments must be distinct and in range")]
    InvalidVertices,
    #[error("exhaustive cut enumeration is capped at {cap} vertices, got {n}")]
    TooLarge { n: usize, cap: usize },
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
}

/// A vertex cut together with what its removal leaves behind.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CutInfo {
    pub cut: VertexSet,
    pub components_after: Vec<VertexSet>,
    pub independent: bool,
}

impl CutInfo {
    /// Build and re-verify: the removal must actually disconnect.
    fn checked(g: &Graph, cut: VertexSet) -> Option<CutInfo> {
        let rest = g.vertex_set() - cut;
        let components_after = g.components_within(&rest);
        if components_after.len() < 2 {
            return None;
        }
        let independent = is_independent(g, &cut);
        Some(CutInfo {
            cut,
            components_after,
            independent,
        })
    }
}

fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| {
        let mut rest = *s;
        rest.remove(v);
        rest.is_subset_of(g.neighbors(v))
    })
}

/// Count of internally vertex-disjoint `s`-`t` paths via unit-capacity
/// max-flow on the vertex-split digraph.
fn vertex_flow(g: &Graph, s: Vertex, t: Vertex) -> usize {
    let n = g.n();
    // Node 2v = "in", 2v+1 = "out"; big capacities for s, t internals.
    let nodes = 2 * n;
    let big = n as i32;
    let mut cap = vec![vec![0i32; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { big } else { 1 };
        for u in g.neighbors(v).iter() {
            cap[2 * v + 1][2 * u] = big;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0usize;
    loop {
        // BFS for an augmenting path.
        let mut parent = vec![usize::MAX; nodes];
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for u in 0..nodes {
                if parent[u] == usize::MAX && cap[v][u] > 0 {
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
        }
        if parent[sink] == usize::MAX {
            return flow;
        }
        let mut u = sink;
        while u != source {
            let p = parent[u];
            cap[p][u] -= 1;
            cap[u][p] += 1;
            u = p;
        }
        flow += 1;
    }
}

/// Minimum number of vertices whose removal disconnects the graph or
/// reduces it to a single vertex; `n - 1` for complete graphs, `0` for
/// disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 1, "connectivity needs at least one vertex");
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(vertex_flow(g, s, t));
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// Every independent vertex cut of size at least `min_size`, ascending by
/// size then members.
pub fn all_independent_cuts(
    g: &Graph,
    min_size: usize,
) -> Result<Vec<CutInfo>, StructureError> {
    assert!(min_size >= 1, "min_size must be positive");
    let n = g.n();
    if n > CUT_ENUM_MAX {
        return Err(StructureError::TooLarge { n, cap: CUT_ENUM_MAX });
    }
    let mut cuts = Vec::new();
    let mut stack: Vec<(Vertex, VertexSet)> = (0..n).rev().map(|v| (v, VertexSet::empty())).collect();
    while let Some((v, set)) = stack.pop() {
        if g.neighbors(v).intersects(&set) {
            continue;
        }
        let mut grown = set;
        grown.insert(v);
        if grown.len() >= min_size {
            if let Some(info) = CutInfo::checked(g, grown) {
                cuts.push(info);
            }
        }
        for u in (v + 1..n).rev() {
            stack.push((u, grown));
        }
    }
    cuts.sort_by_key(|c| (c.cut.len(), c.cut.to_vec()));
    Ok(cuts)
}

/// Result of [`independent_cuts`]: inclusion-minimal candidates plus a
/// flag recording that the enumeration was exhaustive.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IndependentCuts {
    pub cuts: Vec<CutInfo>,
    pub exhaustive: bool,
}

/// Independent vertex cuts of size at least `min_size`, reduced to the
/// inclusion-minimal candidates.
pub fn independent_cuts(g: &Graph, min_size: usize) -> Result<IndependentCuts, StructureError> {
    let all = all_independent_cuts(g, min_size)?;
    let cuts: Vec<CutInfo> = all
        .iter()
        .filter(|c| {
            !all.iter()
                .any(|other| other.cut != c.cut && other.cut.is_subset_of(&c.cut))
        })
        .cloned()
        .collect();
    Ok(IndependentCuts {
        cuts,
        exhaustive: true,
    })
}

/// An independent cut `S` and a component `K` of `G - S` in which every
/// vertex dominates `V(K) ∪ S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DominatingCutWitness {
    pub cut: VertexSet,
    pub component: VertexSet,
}

/// Search for a [`DominatingCutWitness`] over all independent cuts of
/// size at least three, without checking any hypotheses.
pub fn dominating_cut_search(g: &Graph) -> Result<Option<DominatingCutWitness>, StructureError> {
    for info in all_independent_cuts(g, 3)? {
        for comp in &info.components_after {
            let target = *comp | info.cut;
            if comp.iter().all(|v| target.is_subset_of(&g.closed_neighbors(v))) {
                return Ok(Some(DominatingCutWitness {
                    cut: info.cut,
                    component: *comp,
                }));
            }
        }
    }
    Ok(None)
}

/// [`dominating_cut_search`] behind the full hypothesis set: minimum
/// degree at least 3, an independent cut of size at least 3, and
/// 3-γt-edge-criticality.
pub fn cut_domination_witness(
    g: &Graph,
) -> Result<Option<DominatingCutWitness>, StructureError> {
    if g.min_degree() < 3 {
        return Err(StructureError::PreconditionUnmet(
            "minimum degree below 3".into(),
        ));
    }
    if all_independent_cuts(g, 3)?.is_empty() {
        return Err(StructureError::PreconditionUnmet(
            "no independent vertex cut of size at least 3".into(),
        ));
    }
    if !is_three_gt_critical(g) {
        return Err(StructureError::PreconditionUnmet(
            "not 3-γt-edge-critical".into(),
        ));
    }
    dominating_cut_search(g)
}

/// Vertices adjacent to both members of a 2-cut (`strong`) or to exactly
/// one (`weak`).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct StrongWeak {
    pub strong: VertexSet,
    pub weak: VertexSet,
}

/// The property a 2-cut classification can violate, in check order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conn2Property {
    /// `{x, y}` dominates the graph, i.e. everything else is strong or weak.
    CutDominates,
    /// `x` and `y` are non-adjacent.
    CutNonadjacent,
    /// Strong vertices of one component form a clique.
    StrongCliquePerComponent,
    /// At most one component contains weak vertices.
    WeakInOneComponent,
    /// The weak vertices form a clique.
    WeakClique,
    /// Exactly two components after removing the cut.
    TwoComponents,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Conn2Violation {
    pub property: Conn2Property,
    pub detail: String,
}

/// Outcome of the 2-cut structural claims.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Conn2Outcome {
    Classified(StrongWeak),
    Violation(Conn2Violation),
}

/// Classify `G - {x, y}` into strong and weak vertices and verify the
/// structural claims that hold when `{x, y}` is a minimum cut of a
/// 3-γt-edge-critical graph of diameter two (the caller establishes
/// those hypotheses). The first failing property is reported.
pub fn strong_weak(g: &Graph, x: Vertex, y: Vertex) -> Result<Conn2Outcome, StructureError> {
    let n = g.n();
    if x >= n || y >= n || x == y {
        return Err(StructureError::InvalidVertices);
    }
    let cut = VertexSet::from_iter([x, y]);
    let rest = g.vertex_set() - cut;
    let components = g.components_within(&rest);
    if components.len() < 2 {
        return Err(StructureError::PreconditionUnmet(format!(
            "removing {{{x},{y}}} does not disconnect the graph"
        )));
    }

    let mut strong = VertexSet::empty();
    let mut weak = VertexSet::empty();
    let mut uncovered = VertexSet::empty();
    for v in rest.iter() {
        match (g.has_edge(v, x), g.has_edge(v, y)) {
            (true, true) => strong.insert(v),
            (true, false) | (false, true) => weak.insert(v),
            (false, false) => uncovered.insert(v),
        }
    }

    let violation = |property, detail: String| {
        Ok(Conn2Outcome::Violation(Conn2Violation { property, detail }))
    };

    if !uncovered.is_empty() {
        return violation(
            Conn2Property::CutDominates,
            format!("vertices {uncovered} join neither {x} nor {y}"),
        );
    }
    if g.has_edge(x, y) {
        return violation(Conn2Property::CutNonadjacent, format!("{x}{y} is an edge"));
    }
    for comp in &components {
        let s = strong & *comp;
        if !is_clique(g, &s) {
            return violation(
                Conn2Property::StrongCliquePerComponent,
                format!("strong vertices {s} of component {comp} are not a clique"),
            );
        }
    }
    let weak_components = components.iter().filter(|c| c.intersects(&weak)).count();
    if weak_components > 1 {
        return violation(
            Conn2Property::WeakInOneComponent,
            format!("{weak_components} components contain weak vertices"),
        );
    }
    if !is_clique(g, &weak) {
        return violation(
            Conn2Property::WeakClique,
            format!("weak vertices {weak} are not a clique"),
        );
    }
    if components.len() != 2 {
        return violation(
            Conn2Property::TwoComponents,
            format!("{} components after removing the cut", components.len()),
        );
    }
    Ok(Conn2Outcome::Classified(StrongWeak { strong, weak }))
}

/// Pass/fail status of one claim inside a [`Conn3Report`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum ClaimStatus {
    Pass,
    Fail(String),
}

impl ClaimStatus {
    pub fn passed(&self) -> bool {
        matches!(self, ClaimStatus::Pass)
    }

    fn fail(detail: impl Into<String>) -> ClaimStatus {
        ClaimStatus::Fail(detail.into())
    }
}

/// Structural claims about a 3-cut of a 3-γt-edge-critical graph of
/// diameter two. `cut_dominators_union` is recorded, never asserted: the
/// underlying statement is a without-loss-of-generality reduction, not a
/// universal truth.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Conn3Report {
    pub component_count: usize,
    /// Exactly two components after removing the cut.
    pub two_components: ClaimStatus,
    /// Within one component, vertices dominating the whole cut are
    /// pairwise adjacent.
    pub dominating_clique: ClaimStatus,
    /// Across components, equal cut-neighborhoods force both vertices to
    /// dominate the cut.
    pub cross_neighborhoods: ClaimStatus,
    /// `|S1* ∪ S2*|` where `Si*` is the set of cut vertices dominating
    /// component `i`.
    pub cut_dominators_union: usize,
}

impl Conn3Report {
    pub fn all_passed(&self) -> bool {
        self.two_components.passed()
            && self.dominating_clique.passed()
            && self.cross_neighborhoods.passed()
    }
}

/// Evaluate the 3-cut claims for `{x, y, z}`; hypotheses beyond an actual
/// separation are the caller's business.
pub fn conn3_claims(
    g: &Graph,
    x: Vertex,
    y: Vertex,
    z: Vertex,
) -> Result<Conn3Report, StructureError> {
    let n = g.n();
    if x >= n || y >= n || z >= n || x == y || y == z || x == z {
        return Err(StructureError::InvalidVertices);
    }
    let cut = VertexSet::from_iter([x, y, z]);
    let rest = g.vertex_set() - cut;
    let components = g.components_within(&rest);
    if components.len() < 2 {
        return Err(StructureError::PreconditionUnmet(format!(
            "removing {{{x},{y},{z}}} does not disconnect the graph"
        )));
    }

    let two_components = if components.len() == 2 {
        ClaimStatus::Pass
    } else {
        ClaimStatus::fail(format!("{} components", components.len()))
    };

    let dominates_cut = |v: Vertex| cut.is_subset_of(g.neighbors(v));

    let mut dominating_clique = ClaimStatus::Pass;
    'outer: for comp in &components {
        let dominators: Vec<Vertex> = comp.iter().filter(|&v| dominates_cut(v)).collect();
        for (i, &v) in dominators.iter().enumerate() {
            for &w in &dominators[i + 1..] {
                if !g.has_edge(v, w) {
                    dominating_clique = ClaimStatus::fail(format!(
                        "{v} and {w} both dominate the cut but are non-adjacent"
                    ));
                    break 'outer;
                }
            }
        }
    }

    let mut cross_neighborhoods = ClaimStatus::Pass;
    'cross: for (i, ci) in components.iter().enumerate() {
        for cj in &components[i + 1..] {
            for v1 in ci.iter() {
                for v2 in cj.iter() {
                    let n1 = *g.neighbors(v1) & cut;
                    let n2 = *g.neighbors(v2) & cut;
                    if n1 == n2 && n1 != cut {
                        cross_neighborhoods = ClaimStatus::fail(format!(
                            "{v1} and {v2} share the cut-neighborhood {n1} without dominating"
                        ));
                        break 'cross;
                    }
                }
            }
        }
    }

    let mut union = VertexSet::empty();
    for comp in &components {
        for s in cut.iter() {
            if comp.is_subset_of(g.neighbors(s)) {
                union.insert(s);
            }
        }
    }

    Ok(Conn3Report {
        component_count: components.len(),
        two_components,
        dominating_clique,
        cross_neighborhoods,
        cut_dominators_union: union.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force connectivity: smallest vertex set whose removal
    /// disconnects, with the complete-graph convention.
    fn connectivity_oracle(g: &Graph) -> usize {
        let n = g.n();
        let all = g.vertex_set();
        for k in 0..n {
            for mask in 0u32..(1 << n) {
                let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
                if s.len() == k && g.components_within(&(all - s)).len() >= 2 {
                    return k;
                }
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(2, 3)), 2);
        assert_eq!(vertex_connectivity(&Graph::path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::complete(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::complete(2)), 1);
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(vertex_connectivity(&disconnected), 0);
    }

    #[test]
    fn connectivity_matches_oracle_exhaustively() {
        for n in 1..=5usize {
            for mask in 0u64..(1 << (n * (n - 1) / 2)) {
                let g = graph_from_mask(n, mask);
                assert_eq!(
                    vertex_connectivity(&g),
                    connectivity_oracle(&g),
                    "disagreement on {g:?}"
                );
            }
        }
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> k & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn independent_cut_examples() {
        let c6 = Graph::cycle(6);
        let cuts = independent_cuts(&c6, 3).unwrap();
        assert!(cuts.exhaustive);
        let sets: Vec<Vec<usize>> = cuts.cuts.iter().map(|c| c.cut.to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 2, 4], vec![1, 3, 5]]);
        assert_eq!(cuts.cuts[0].components_after.len(), 3);
        assert!(cuts.cuts[0].independent);

        assert!(independent_cuts(&Graph::complete(4), 1).unwrap().cuts.is_empty());

        let k33 = Graph::complete_bipartite(3, 3);
        let sides: Vec<Vec<usize>> = independent_cuts(&k33, 3)
            .unwrap()
            .cuts
            .iter()
            .map(|c| c.cut.to_vec())
            .collect();
        assert_eq!(sides, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn independent_cuts_cap() {
        let g = Graph::empty(17);
        assert!(matches!(
            independent_cuts(&g, 1),
            Err(StructureError::TooLarge { n: 17, cap: 16 })
        ));
    }

    #[test]
    fn minimal_filter_drops_supersets() {
        // In P5, {1} and {3} are cut vertices and {1,3} is also a cut;
        // only the singletons are inclusion-minimal.
        let p5 = Graph::path(5);
        let all = all_independent_cuts(&p5, 1).unwrap();
        assert!(all.iter().any(|c| c.cut.to_vec() == vec![1, 3]));
        let minimal = independent_cuts(&p5, 1).unwrap();
        let sets: Vec<Vec<usize>> = minimal.cuts.iter().map(|c| c.cut.to_vec()).collect();
        assert_eq!(sets, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn dominating_cut_search_examples() {
        // K_{2,3}: the 3-side is an independent cut and either singleton
        // component dominates itself plus the cut.
        let k23 = Graph::complete_bipartite(2, 3);
        let witness = dominating_cut_search(&k23).unwrap().unwrap();
        assert_eq!(witness.cut.to_vec(), vec![2, 3, 4]);
        assert_eq!(witness.component.to_vec(), vec![0]);

        // C6 has independent cuts of size 3 but no dominating component.
        assert!(dominating_cut_search(&Graph::cycle(6)).unwrap().is_none());
    }

    #[test]
    fn cut_domination_witness_validates_hypotheses() {
        // γt(K_{3,3}) = 2, so criticality fails even though δ = 3 and an
        // independent cut of size 3 exists.
        let k33 = Graph::complete_bipartite(3, 3);
        match cut_domination_witness(&k33) {
            Err(StructureError::PreconditionUnmet(msg)) => {
                assert!(msg.contains("3-γt"), "unexpected message: {msg}")
            }
            other => panic!("expected precondition error, got {other:?}"),
        }
        // C6 fails already on minimum degree.
        assert!(matches!(
            cut_domination_witness(&Graph::cycle(6)),
            Err(StructureError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn strong_weak_classifies_c5() {
        let c5 = Graph::cycle(5);
        match strong_weak(&c5, 0, 2).unwrap() {
            Conn2Outcome::Classified(sw) => {
                assert_eq!(sw.strong.to_vec(), vec![1]);
                assert_eq!(sw.weak.to_vec(), vec![3, 4]);
            }
            other => panic!("expected classification, got {other:?}"),
        }
    }

    #[test]
    fn strong_weak_reports_adjacent_cut() {
        let g = Graph::cycle(5).with_edge(0, 2);
        match strong_weak(&g, 0, 2).unwrap() {
            Conn2Outcome::Violation(v) => {
                assert_eq!(v.property, Conn2Property::CutNonadjacent)
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn strong_weak_reports_weak_non_clique() {
        // Weak vertices 2 and 3 sit in one component, joined through the
        // strong vertex 5, but are not adjacent to each other.
        let g = Graph::from_edges(
            6,
            &[(0, 2), (1, 3), (2, 5), (3, 5), (0, 5), (1, 5), (0, 4), (1, 4)],
        );
        match strong_weak(&g, 0, 1).unwrap() {
            Conn2Outcome::Violation(v) => {
                assert_eq!(v.property, Conn2Property::WeakClique);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn strong_weak_rejects_non_separating_pair() {
        assert!(matches!(
            strong_weak(&Graph::complete(4), 0, 1),
            Err(StructureError::PreconditionUnmet(_))
        ));
        assert!(matches!(
            strong_weak(&Graph::cycle(5), 0, 0),
            Err(StructureError::InvalidVertices)
        ));
    }

    #[test]
    fn conn3_positive_fixture() {
        // K_{2,3} with the 3-side as the cut: two singleton components,
        // both dominating the cut, every claim clean.
        let k23 = Graph::complete_bipartite(2, 3);
        let report = conn3_claims(&k23, 2, 3, 4).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.component_count, 2);
        assert_eq!(report.cut_dominators_union, 3);
    }

    #[test]
    fn conn3_three_component_fixture() {
        let k33 = Graph::complete_bipartite(3, 3);
        let report = conn3_claims(&k33, 3, 4, 5).unwrap();
        assert!(!report.two_components.passed());
        assert_eq!(report.component_count, 3);
        // The other claims still hold on this fixture.
        assert!(report.dominating_clique.passed());
    }

    #[test]
    fn conn3_dominating_clique_violation() {
        // 0 and 1 dominate the cut {3,4,5} from the same component but
        // are non-adjacent; vertex 6 forms the second component.
        let g = Graph::from_edges(
            7,
            &[
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (6, 3),
            ],
        );
        let report = conn3_claims(&g, 3, 4, 5).unwrap();
        assert!(report.two_components.passed());
        match &report.dominating_clique {
            ClaimStatus::Fail(detail) => assert!(detail.contains("non-adjacent")),
            ClaimStatus::Pass => panic!("expected the dominating-clique claim to fail"),
        }
    }

    #[test]
    fn conn3_rejects_non_separating_triple() {
        assert!(matches!(
            conn3_claims(&Graph::complete(5), 0, 1, 2),
            Err(StructureError::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn reports_serialize() {
        let k23 = Graph::complete_bipartite(2, 3);
        let report = conn3_claims(&k23, 2, 3, 4).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"two_components\":{\"status\":\"pass\"}"));
        let cuts = independent_cuts(&k23, 3).unwrap();
        assert!(serde_json::to_string(&cuts).unwrap().contains("[2,3,4]"));
    }
}
