//! Human-readable single-graph traces.
//!
//! Each trace walks through the evidence behind one check in a stable
//! order: witness sets, arrow witnesses, association tables, cut
//! structure. Output is plain text, one finding per line.

use edgecrit::criticality::{
    classify_complement, is_three_gt_critical, is_k_supercritical,
    is_two_nontrivial_clique_union, missing_edge_case, quasi_edges, MissingEdgeCase,
};
use edgecrit::domination::{
    adjacent_dominating_pair, duality_check, total_domination_number,
};
use edgecrit::g6;
use edgecrit::metrics::{diameter, Distance};
use edgecrit::structure::{
    all_independent_cuts, conn3_claims, dominating_cut_search, strong_weak, vertex_connectivity,
    Conn2Outcome,
};
use edgecrit::{Graph, VertexPair, VertexSet};
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExplainError {
    #[error("unknown check '{0}' (expected one of: {})", KNOWN.join(", "))]
    UnknownCheck(String),
}

pub const KNOWN: [&str; 8] = [
    "conjecture",
    "classify",
    "duality",
    "quasi-edges",
    "dichotomy",
    "supercritical",
    "cuts",
    "claims",
];

/// Trace one named check on one graph.
pub fn explain(g: &Graph, check: &str) -> Result<String, ExplainError> {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "graph {} (n={}, m={})", g6::encode_string(g), g.n(), g.edge_count()).unwrap();
    match check {
        "conjecture" => conjecture_trace(g, w),
        "classify" => classify_trace(g, w),
        "duality" => duality_trace(g, w),
        "quasi-edges" => quasi_edge_trace(g, w),
        "dichotomy" => dichotomy_trace(g, w),
        "supercritical" => supercritical_trace(g, w),
        "cuts" => cuts_trace(g, w),
        "claims" => claims_trace(g, w),
        other => return Err(ExplainError::UnknownCheck(other.to_string())),
    }
    Ok(out)
}

fn conjecture_trace(g: &Graph, w: &mut String) {
    let n = g.n();
    let diam = diameter(g);
    if diam != Distance::Finite(2) {
        writeln!(w, "not diameter-2 edge-critical (diameter {diam})").unwrap();
        return;
    }
    for (u, v) in g.edges() {
        let after = diameter(&g.without_edge(u, v));
        if after <= Distance::Finite(2) {
            writeln!(
                w,
                "not edge-critical: deleting {u}-{v} keeps the diameter at {after}"
            )
            .unwrap();
            return;
        }
    }
    let m = g.edge_count();
    let bound = n * n / 4;
    writeln!(w, "diameter-2 edge-critical; |E| = {m}, ⌊n²/4⌋ = {bound}").unwrap();
    if m > bound {
        writeln!(w, "BOUND VIOLATED").unwrap();
    } else if m == bound {
        let extremal = edgecrit::enumerate::canonical_form(g).ok()
            == edgecrit::enumerate::canonical_form(&crate::checks::balanced_bipartite(n)).ok();
        writeln!(
            w,
            "equality case; isomorphic to the balanced complete bipartite graph: {extremal}"
        )
        .unwrap();
    } else {
        writeln!(w, "strict inequality").unwrap();
    }
}

fn classify_trace(g: &Graph, w: &mut String) {
    let h = g.complement();
    writeln!(w, "class: {}", classify_complement(g)).unwrap();
    writeln!(w, "γt(G^c) = {}", total_domination_number(&h)).unwrap();
    for &(u, v) in &h.missing_edges() {
        let after = total_domination_number(&h.with_edge(u, v));
        writeln!(w, "  γt(G^c + {u}-{v}) = {after}").unwrap();
    }
}

fn duality_trace(g: &Graph, w: &mut String) {
    match adjacent_dominating_pair(g) {
        Some(p) => writeln!(w, "adjacent dominating pair: {p}").unwrap(),
        None => writeln!(w, "no adjacent dominating pair").unwrap(),
    }
    let cdiam = diameter(&g.complement());
    writeln!(w, "diam(G^c) = {cdiam}").unwrap();
    writeln!(w, "duality holds: {}", duality_check(g)).unwrap();
}

fn quasi_edge_trace(g: &Graph, w: &mut String) {
    if !is_three_gt_critical(g) {
        writeln!(w, "note: graph is not 3-γt-edge-critical").unwrap();
    }
    for &(u, v) in &g.missing_edges() {
        let e = VertexPair::of(g, u, v);
        let qs = quasi_edges(g, &e).expect("pair is missing");
        let list = qs
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(w, "missing {e}: quasi-edges [{list}]").unwrap();
    }
}

fn dichotomy_trace(g: &Graph, w: &mut String) {
    for &(u, v) in &g.missing_edges() {
        let e = VertexPair::of(g, u, v);
        match missing_edge_case(g, &e).expect("pair is missing") {
            MissingEdgeCase::DominatesAll => writeln!(w, "missing {e}: dominates G").unwrap(),
            MissingEdgeCase::Arrow(a) => writeln!(w, "missing {e}: arrow {a}").unwrap(),
            MissingEdgeCase::Violation => writeln!(w, "missing {e}: VIOLATION").unwrap(),
        }
    }
}

fn supercritical_trace(g: &Graph, w: &mut String) {
    writeln!(w, "γt = {}", total_domination_number(g)).unwrap();
    for &(u, v) in &g.missing_edges() {
        writeln!(
            w,
            "  γt(G + {u}-{v}) = {}",
            total_domination_number(&g.with_edge(u, v))
        )
        .unwrap();
    }
    writeln!(w, "4-supercritical: {}", is_k_supercritical(g, 4)).unwrap();
    writeln!(
        w,
        "two nontrivial cliques: {}",
        is_two_nontrivial_clique_union(g)
    )
    .unwrap();
}

fn cuts_trace(g: &Graph, w: &mut String) {
    writeln!(w, "κ = {}", vertex_connectivity(g)).unwrap();
    match all_independent_cuts(g, 3) {
        Err(e) => writeln!(w, "independent cuts: {e}").unwrap(),
        Ok(cuts) => {
            for c in &cuts {
                let comps = c
                    .components_after
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(w, "independent cut {} -> components {comps}", c.cut).unwrap();
            }
            if cuts.is_empty() {
                writeln!(w, "no independent cut of size >= 3").unwrap();
            }
        }
    }
}

fn claims_trace(g: &Graph, w: &mut String) {
    writeln!(w, "γt = {}", total_domination_number(g)).unwrap();
    writeln!(w, "3-γt-edge-critical: {}", is_three_gt_critical(g)).unwrap();
    writeln!(w, "diameter = {}", diameter(g)).unwrap();
    let kappa = vertex_connectivity(g);
    writeln!(w, "κ = {kappa}").unwrap();
    match dominating_cut_search(g) {
        Ok(Some(witness)) => writeln!(
            w,
            "dominating cut witness: S = {}, K = {}",
            witness.cut, witness.component
        )
        .unwrap(),
        Ok(None) => writeln!(w, "no dominating cut witness").unwrap(),
        Err(e) => writeln!(w, "dominating cut search: {e}").unwrap(),
    }
    let n = g.n();
    let all = g.vertex_set();
    if kappa == 2 {
        for x in 0..n {
            for y in x + 1..n {
                if g.components_within(&(all - VertexSet::from_iter([x, y]))).len() >= 2 {
                    match strong_weak(g, x, y) {
                        Ok(Conn2Outcome::Classified(sw)) => writeln!(
                            w,
                            "cut {{{x},{y}}}: strong {} weak {}",
                            sw.strong, sw.weak
                        )
                        .unwrap(),
                        Ok(Conn2Outcome::Violation(v)) => {
                            writeln!(w, "cut {{{x},{y}}}: VIOLATION {:?} ({})", v.property, v.detail)
                                .unwrap()
                        }
                        Err(e) => writeln!(w, "cut {{{x},{y}}}: {e}").unwrap(),
                    }
                }
            }
        }
    }
    if kappa == 3 {
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if g
                        .components_within(&(all - VertexSet::from_iter([x, y, z])))
                        .len()
                        >= 2
                    {
                        match conn3_claims(g, x, y, z) {
                            Ok(r) => writeln!(
                                w,
                                "cut {{{x},{y},{z}}}: components={} two_components={:?} \
                                 dominating_clique={:?} cross_neighborhoods={:?} |S*∪|={}",
                                r.component_count,
                                r.two_components,
                                r.dominating_clique,
                                r.cross_neighborhoods,
                                r.cut_dominators_union
                            )
                            .unwrap(),
                            Err(e) => writeln!(w, "cut {{{x},{y},{z}}}: {e}").unwrap(),
                        }
                    }
                }
            }
        }
    }
}
