//! Randomized invariant checks across the whole kernel stack.

use edgecrit::criticality::{arrow_target, quasi_edges};
use edgecrit::domination::{domination_number, DominationKind, DominationNumber};
use edgecrit::enumerate::canonical_form;
use edgecrit::g6;
use edgecrit::metrics::{distance, diameter, Distance};
use edgecrit::structure::vertex_connectivity;
use edgecrit::{Graph, PairKind, VertexPair, VertexSet};
use proptest::prelude::*;

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges)
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// Power-set oracle for domination numbers, independent of the search.
fn domination_oracle(g: &Graph, kind: DominationKind) -> DominationNumber {
    let n = g.n();
    let mut best: Option<u32> = None;
    for mask in 0u64..(1 << n) {
        let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
        if s.is_empty() {
            continue;
        }
        let covered = match kind {
            DominationKind::Closed => g.closed_neighborhood(&s),
            DominationKind::Total => g.neighborhood_of_set(&s),
        };
        if covered == g.vertex_set() {
            best = Some(best.map_or(s.len() as u32, |b| b.min(s.len() as u32)));
        }
    }
    best.map_or(DominationNumber::Infinite, DominationNumber::Finite)
}

/// Subset-removal oracle for vertex connectivity.
fn connectivity_oracle(g: &Graph) -> usize {
    let n = g.n();
    let all = g.vertex_set();
    for k in 0..n {
        for mask in 0u64..(1 << n) {
            let s = VertexSet::from_iter((0..n).filter(|&v| mask >> v & 1 == 1));
            if s.len() == k && g.components_within(&(all - s)).len() >= 2 {
                return k;
            }
        }
    }
    n - 1
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in graph_strategy(0, 70)) {
        let bytes = g6::encode(&g);
        let back = g6::decode(&bytes).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(g6::encode(&back), bytes);
    }

    /// The decoder never panics on arbitrary bytes, and anything it
    /// accepts re-encodes to the identical record (strict canonicality).
    /// Bytes are biased toward the graph6 alphabet so the deeper header,
    /// length, and padding paths all get exercised.
    #[test]
    fn graph6_decoder_is_total_and_strict(bytes in prop::collection::vec(58u8..=130, 0..40)) {
        if let Ok(g) = g6::decode(&bytes) {
            prop_assert_eq!(g6::encode(&g), bytes);
        }
    }

    #[test]
    fn complement_involution_and_size(g in graph_strategy(1, 20)) {
        let c = g.complement();
        prop_assert_eq!(&c.complement(), &g);
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        c.validate().unwrap();
    }

    #[test]
    fn edits_keep_adjacency_symmetric(
        g in graph_strategy(2, 12),
        ops in prop::collection::vec((0usize..12, 0usize..12), 0..20),
    ) {
        let mut cur = g;
        for (a, b) in ops {
            let (u, v) = (a % cur.n(), b % cur.n());
            if u == v {
                continue;
            }
            cur = if cur.has_edge(u, v) {
                cur.without_edge(u, v)
            } else {
                cur.with_edge(u, v)
            };
            cur.validate().unwrap();
        }
    }

    #[test]
    fn canonical_form_invariant_under_relabeling(g in graph_strategy(1, 7)) {
        let base = canonical_form(&g).unwrap();
        let n = g.n();
        proptest!(|(perm in permutation(n))| {
            prop_assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), base.clone());
        });
    }

    #[test]
    fn triangle_inequality(g in graph_strategy(1, 8)) {
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    if let (Distance::Finite(a), Distance::Finite(b), Distance::Finite(c)) =
                        (distance(&g, u, w), distance(&g, u, v), distance(&g, v, w))
                    {
                        prop_assert!(a <= b + c);
                    }
                }
            }
        }
    }

    #[test]
    fn diameter_finite_iff_connected(g in graph_strategy(1, 10)) {
        prop_assert_eq!(diameter(&g).is_infinite(), g.components().len() > 1);
    }

    #[test]
    fn domination_numbers_match_power_set_oracle(g in graph_strategy(1, 7)) {
        for kind in [DominationKind::Closed, DominationKind::Total] {
            prop_assert_eq!(domination_number(&g, kind), domination_oracle(&g, kind));
        }
    }

    #[test]
    fn connectivity_matches_subset_oracle(g in graph_strategy(1, 6)) {
        prop_assert_eq!(vertex_connectivity(&g), connectivity_oracle(&g));
    }

    #[test]
    fn quasi_edges_contain_an_end(g in graph_strategy(2, 8)) {
        for &(u, v) in &g.missing_edges() {
            let e = VertexPair::of(&g, u, v);
            prop_assert_eq!(e.kind, PairKind::MissingEdge);
            for qe in quasi_edges(&g, &e).unwrap() {
                prop_assert!(qe.contains(u) || qe.contains(v));
                // The arrow behind a quasi-edge points at the other end.
                let w = arrow_target(&g, qe.u, qe.v).unwrap();
                prop_assert!(w == u || w == v);
            }
        }
    }
}
