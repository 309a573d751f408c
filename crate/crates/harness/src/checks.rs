//! Per-graph evaluation of the verification checks.
//!
//! Each check produces a [`ClaimFlag`] (`n/a` when the graph is outside
//! the check's hypothesis class) plus a violation record when it fails.
//! Violations are never swallowed: a mathematically impossible state
//! (such as a diameter-2 edge-critical graph whose complement matches no
//! classification class) surfaces as a failed claim on that graph.

use crate::verdict::{ClaimFlag, GraphVerdict, Violation};
use edgecrit::criticality::{
    classify_with, is_diameter_d_edge_critical, is_three_gt_critical, missing_edge_case,
    quasi_edges, supercritical_characterization, ComplementFlags, MissingEdgeCase,
};
use edgecrit::domination::{duality_check, total_domination_number, DominationNumber};
use edgecrit::enumerate::canonical_form;
use edgecrit::g6;
use edgecrit::metrics::{diameter, Distance};
use edgecrit::partition::{
    association_bound_check, build_association, equality_properties, AssociationError, Partition,
};
use edgecrit::structure::{
    all_independent_cuts, conn3_claims, dominating_cut_search, strong_weak, vertex_connectivity,
    Conn2Outcome,
};
use edgecrit::{Graph, VertexSet};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// Order cap for the per-partition association campaign; partitions blow
/// up as `2^(n-1)` and the properties are size-independent.
pub const PARTITION_SCAN_MAX: usize = 7;

/// The individually selectable checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CheckKind {
    /// Edge bound and extremal-graph identification for diameter-2
    /// edge-critical graphs.
    Conjecture,
    /// Adjacent dominating pair vs. complement diameter.
    Duality,
    /// Exhaustive and exclusive complement classification.
    Trichotomy,
    /// 4-supercritical graphs are exactly two nontrivial cliques.
    Supercritical,
    /// 3-γt-edge-critical graphs have diameter 2 or 3.
    DiameterBound,
    /// Every missing edge of a 3-γt-edge-critical graph dominates or
    /// admits an arrow witness.
    Dichotomy,
    /// Partition association bound over all partitions (small orders).
    Partition,
    /// Strict complement bound for connectivity 1, 2, 3 and for the
    /// independent-cut hypothesis.
    Bounds,
    /// Structural claim checkers: dominating cut component, 2-cut
    /// strong/weak properties, 3-cut claims.
    Claims,
}

pub const ALL_CHECKS: [CheckKind; 9] = [
    CheckKind::Conjecture,
    CheckKind::Duality,
    CheckKind::Trichotomy,
    CheckKind::Supercritical,
    CheckKind::DiameterBound,
    CheckKind::Dichotomy,
    CheckKind::Partition,
    CheckKind::Bounds,
    CheckKind::Claims,
];

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Conjecture => "conjecture",
            CheckKind::Duality => "duality",
            CheckKind::Trichotomy => "trichotomy",
            CheckKind::Supercritical => "supercritical",
            CheckKind::DiameterBound => "diameter-bound",
            CheckKind::Dichotomy => "dichotomy",
            CheckKind::Partition => "partition",
            CheckKind::Bounds => "bounds",
            CheckKind::Claims => "claims",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckKind, String> {
        match s {
            "conjecture" => Ok(CheckKind::Conjecture),
            "duality" => Ok(CheckKind::Duality),
            "trichotomy" => Ok(CheckKind::Trichotomy),
            "supercritical" => Ok(CheckKind::Supercritical),
            "diameter-bound" => Ok(CheckKind::DiameterBound),
            "dichotomy" => Ok(CheckKind::Dichotomy),
            "partition" => Ok(CheckKind::Partition),
            "bounds" => Ok(CheckKind::Bounds),
            "claims" => Ok(CheckKind::Claims),
            other => Err(format!(
                "unknown check '{other}' (expected one of: {})",
                ALL_CHECKS.map(|c| c.name()).join(", ")
            )),
        }
    }
}

/// Invariants computed once per scanned graph.
#[derive(Clone, Debug)]
pub struct GraphFacts {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub m_complement: usize,
    pub quarter_bound: usize,
    pub diam: Distance,
    pub gamma_t: DominationNumber,
    pub connectivity: usize,
    pub min_degree: usize,
    pub is_d2c: bool,
    pub flags: ComplementFlags,
    pub class: String,
    pub is_3gt: bool,
    /// `None` when the order exceeds the exhaustive cut-enumeration cap,
    /// so the independent-cut hypothesis is unevaluable rather than false.
    pub has_indep_cut3: Option<bool>,
}

pub fn facts(g: &Graph) -> GraphFacts {
    let n = g.n();
    let m = g.edge_count();
    let has_indep_cut3 = all_independent_cuts(g, 3)
        .map(|cuts| !cuts.is_empty())
        .ok();
    let is_d2c = n >= 2 && is_diameter_d_edge_critical(g, 2);
    let flags = ComplementFlags::of(g);
    GraphFacts {
        graph6: g6::encode_string(g),
        n,
        m,
        m_complement: n * n.saturating_sub(1) / 2 - m,
        quarter_bound: n * n / 4,
        diam: diameter(g),
        gamma_t: total_domination_number(g),
        connectivity: vertex_connectivity(g),
        min_degree: g.min_degree(),
        is_d2c,
        class: classify_with(g, is_d2c, &flags).to_string(),
        flags,
        is_3gt: is_three_gt_critical(g),
        has_indep_cut3,
    }
}

/// Summary-relevant side data produced while checking one graph.
#[derive(Clone, Debug, Default)]
pub struct Digest {
    pub s_star_values: Vec<usize>,
    pub partition_equality_instances: usize,
    pub partition_associations: usize,
}

/// Result of running a check set against one graph.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub facts: GraphFacts,
    pub verdict: GraphVerdict,
    pub violations: Vec<Violation>,
    pub digest: Digest,
}

/// The balanced complete bipartite graph on `n` vertices.
pub fn balanced_bipartite(n: usize) -> Graph {
    Graph::complete_bipartite(n / 2, n.div_ceil(2))
}

/// Run every selected check against `g` and assemble its verdict.
pub fn evaluate(g: &Graph, checks: &[CheckKind]) -> Evaluation {
    evaluate_with(g, facts(g), checks)
}

/// [`evaluate`] with the facts already in hand (campaigns compute them
/// for filtering first).
pub fn evaluate_with(g: &Graph, facts: GraphFacts, checks: &[CheckKind]) -> Evaluation {
    let mut claim_flags: BTreeMap<String, ClaimFlag> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut digest = Digest::default();

    let record = |name: &str, flag: ClaimFlag, detail: Option<String>, out: &mut Vec<Violation>| {
        if flag == ClaimFlag::Fail {
            out.push(Violation {
                graph6: facts.graph6.clone(),
                check: name.to_string(),
                detail: detail.unwrap_or_else(|| "check failed".into()),
            });
        }
        flag
    };

    // Conjecture-side fields are always present in the verdict.
    let bound_ok = !facts.is_d2c || facts.m <= facts.quarter_bound;
    let equality = facts.is_d2c && facts.m == facts.quarter_bound;
    let extremal = equality
        && canonical_form(g).expect("scan orders stay under the canonical cap")
            == canonical_form(&balanced_bipartite(facts.n)).expect("balanced bipartite fits");

    for check in checks {
        match check {
            CheckKind::Conjecture => {
                let (flag, detail) = if !facts.is_d2c {
                    (ClaimFlag::NotApplicable, None)
                } else if !bound_ok {
                    (
                        ClaimFlag::Fail,
                        Some(format!(
                            "diameter-2 edge-critical with {} > {} edges",
                            facts.m, facts.quarter_bound
                        )),
                    )
                } else if equality && !extremal {
                    (
                        ClaimFlag::Fail,
                        Some("edge bound met with equality off the balanced bipartite graph".into()),
                    )
                } else {
                    (ClaimFlag::Pass, None)
                };
                let flag = record("conjecture", flag, detail, &mut violations);
                claim_flags.insert("conjecture".into(), flag);
            }
            CheckKind::Duality => {
                let (flag, detail) = if facts.n < 2 {
                    (ClaimFlag::NotApplicable, None)
                } else if duality_check(g) {
                    (ClaimFlag::Pass, None)
                } else {
                    (
                        ClaimFlag::Fail,
                        Some("adjacent dominating pair disagrees with complement diameter".into()),
                    )
                };
                let flag = record("duality", flag, detail, &mut violations);
                claim_flags.insert("duality".into(), flag);
            }
            CheckKind::Trichotomy => {
                let count = facts.flags.count();
                let exhaustive = facts.is_d2c == (count >= 1);
                let exclusive = count <= 1;
                let (flag, detail) = if exhaustive && exclusive {
                    (ClaimFlag::Pass, None)
                } else {
                    (
                        ClaimFlag::Fail,
                        Some(format!(
                            "is_d2c={} but {} complement classes matched",
                            facts.is_d2c, count
                        )),
                    )
                };
                let flag = record("trichotomy", flag, detail, &mut violations);
                claim_flags.insert("trichotomy".into(), flag);
            }
            CheckKind::Supercritical => {
                let (flag, detail) = if supercritical_characterization(g) {
                    (ClaimFlag::Pass, None)
                } else {
                    (
                        ClaimFlag::Fail,
                        Some("4-supercriticality disagrees with the two-clique shape".into()),
                    )
                };
                let flag = record("supercritical", flag, detail, &mut violations);
                claim_flags.insert("supercritical".into(), flag);
            }
            CheckKind::DiameterBound => {
                let (flag, detail) = if !facts.is_3gt {
                    (ClaimFlag::NotApplicable, None)
                } else {
                    match facts.diam {
                        Distance::Finite(d) if (2..=3).contains(&d) => (ClaimFlag::Pass, None),
                        d => (
                            ClaimFlag::Fail,
                            Some(format!("3-γt-edge-critical with diameter {d}")),
                        ),
                    }
                };
                let flag = record("diameter-bound", flag, detail, &mut violations);
                claim_flags.insert("diameter_bound".into(), flag);
            }
            CheckKind::Dichotomy => {
                let (flag, detail) = if !facts.is_3gt {
                    (ClaimFlag::NotApplicable, None)
                } else {
                    check_dichotomy(g)
                };
                let flag = record("dichotomy", flag, detail, &mut violations);
                claim_flags.insert("dichotomy".into(), flag);
            }
            CheckKind::Partition => {
                let (flag, detail) = if !facts.is_3gt || facts.n > PARTITION_SCAN_MAX || facts.n < 2
                {
                    (ClaimFlag::NotApplicable, None)
                } else {
                    check_partitions(g, &facts, &mut digest)
                };
                let flag = record("partition", flag, detail, &mut violations);
                claim_flags.insert("partition".into(), flag);
            }
            CheckKind::Bounds => {
                for kappa in 1..=3usize {
                    let name = format!("bound_conn{kappa}");
                    let (flag, detail) = if !facts.is_3gt || facts.connectivity != kappa {
                        (ClaimFlag::NotApplicable, None)
                    } else {
                        strict_bound_flag(&facts)
                    };
                    let flag = record(&name, flag, detail, &mut violations);
                    claim_flags.insert(name, flag);
                }
                let (flag, detail) =
                    if !facts.is_3gt
                        || facts.min_degree < 3
                        || facts.has_indep_cut3 != Some(true)
                    {
                        (ClaimFlag::NotApplicable, None)
                    } else {
                        strict_bound_flag(&facts)
                    };
                let flag = record("bound_indep_cut", flag, detail, &mut violations);
                claim_flags.insert("bound_indep_cut".into(), flag);
            }
            CheckKind::Claims => {
                let (flag, detail) =
                    if !facts.is_3gt
                        || facts.min_degree < 3
                        || facts.has_indep_cut3 != Some(true)
                    {
                        (ClaimFlag::NotApplicable, None)
                    } else {
                        match dominating_cut_search(g) {
                            Ok(Some(_)) => (ClaimFlag::Pass, None),
                            Ok(None) => (
                                ClaimFlag::Fail,
                                Some("no independent cut has a dominating component".into()),
                            ),
                            Err(e) => (ClaimFlag::Fail, Some(e.to_string())),
                        }
                    };
                let flag = record("cut_domination", flag, detail, &mut violations);
                claim_flags.insert("cut_domination".into(), flag);

                let applicable_2 =
                    facts.is_3gt && facts.diam == Distance::Finite(2) && facts.connectivity == 2;
                let (flag, detail) = if !applicable_2 {
                    (ClaimFlag::NotApplicable, None)
                } else {
                    check_all_two_cuts(g)
                };
                let flag = record("strong_weak", flag, detail, &mut violations);
                claim_flags.insert("strong_weak".into(), flag);

                let applicable_3 =
                    facts.is_3gt && facts.diam == Distance::Finite(2) && facts.connectivity == 3;
                let (flag, detail) = if !applicable_3 {
                    (ClaimFlag::NotApplicable, None)
                } else {
                    check_all_three_cuts(g, &mut digest)
                };
                let flag = record("conn3", flag, detail, &mut violations);
                claim_flags.insert("conn3".into(), flag);
            }
        }
    }

    let verdict = GraphVerdict {
        graph6: facts.graph6.clone(),
        n: facts.n,
        m_complement: facts.m_complement,
        class: facts.class.clone(),
        diam: facts.diam,
        gamma_t: facts.gamma_t,
        connectivity: facts.connectivity,
        bound_ok,
        equality,
        extremal_balanced_bipartite: extremal,
        claim_flags,
    };
    Evaluation {
        facts,
        verdict,
        violations,
        digest,
    }
}

fn strict_bound_flag(facts: &GraphFacts) -> (ClaimFlag, Option<String>) {
    if facts.m_complement < facts.quarter_bound {
        (ClaimFlag::Pass, None)
    } else {
        (
            ClaimFlag::Fail,
            Some(format!(
                "|E(G^c)| = {} is not below ⌊n²/4⌋ = {}",
                facts.m_complement, facts.quarter_bound
            )),
        )
    }
}

fn check_dichotomy(g: &Graph) -> (ClaimFlag, Option<String>) {
    for &(u, v) in &g.missing_edges() {
        let e = edgecrit::VertexPair::of(g, u, v);
        if missing_edge_case(g, &e).expect("pair is missing") == MissingEdgeCase::Violation {
            return (
                ClaimFlag::Fail,
                Some(format!("missing edge {e} neither dominates nor arrows")),
            );
        }
        for qe in quasi_edges(g, &e).expect("pair is missing") {
            if !(qe.contains(u) || qe.contains(v)) {
                return (
                    ClaimFlag::Fail,
                    Some(format!("quasi-edge {qe} misses both ends of {e}")),
                );
            }
        }
    }
    (ClaimFlag::Pass, None)
}

fn check_partitions(g: &Graph, facts: &GraphFacts, digest: &mut Digest) -> (ClaimFlag, Option<String>) {
    let n = g.n();
    // Fix vertex 0 in part A: (A, B) and (B, A) behave identically.
    for mask in 0u64..(1 << (n - 1)) {
        let mut a = VertexSet::singleton(0);
        for v in 1..n {
            if mask >> (v - 1) & 1 == 1 {
                a.insert(v);
            }
        }
        if a.len() == n {
            continue;
        }
        let p = Partition::new(g, a).expect("nonempty proper subset");
        match build_association(g, &p) {
            Err(AssociationError::HypothesisFailure(_)) => continue,
            Err(e @ AssociationError::InjectivityViolation { .. }) => {
                return (ClaimFlag::Fail, Some(e.to_string()));
            }
            Ok(_) => {}
        }
        digest.partition_associations += 1;
        let bound = association_bound_check(g, &p).expect("association just succeeded");
        if !bound.within_product {
            return (
                ClaimFlag::Fail,
                Some(format!(
                    "association on {p} exists but |E(G^c)| = {} exceeds |A||B| = {}",
                    bound.complement_edges, bound.part_product
                )),
            );
        }
        if facts.m_complement == facts.quarter_bound {
            digest.partition_equality_instances += 1;
            match equality_properties(g, &p) {
                Ok(report) if report.all_passed() => {}
                Ok(report) => {
                    return (
                        ClaimFlag::Fail,
                        Some(format!("equality-case properties violated: {report:?}")),
                    );
                }
                Err(e) => return (ClaimFlag::Fail, Some(e.to_string())),
            }
        }
    }
    (ClaimFlag::Pass, None)
}

/// Every separating pair of a κ=2 graph is a minimum cut; all of them
/// must classify cleanly.
fn check_all_two_cuts(g: &Graph) -> (ClaimFlag, Option<String>) {
    let n = g.n();
    let all = g.vertex_set();
    for x in 0..n {
        for y in x + 1..n {
            let rest = all - VertexSet::from_iter([x, y]);
            if g.components_within(&rest).len() < 2 {
                continue;
            }
            match strong_weak(g, x, y) {
                Ok(Conn2Outcome::Classified(_)) => {}
                Ok(Conn2Outcome::Violation(v)) => {
                    return (
                        ClaimFlag::Fail,
                        Some(format!("cut {{{x},{y}}}: {:?} ({})", v.property, v.detail)),
                    );
                }
                Err(e) => return (ClaimFlag::Fail, Some(e.to_string())),
            }
        }
    }
    (ClaimFlag::Pass, None)
}

fn check_all_three_cuts(g: &Graph, digest: &mut Digest) -> (ClaimFlag, Option<String>) {
    let n = g.n();
    let all = g.vertex_set();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let rest = all - VertexSet::from_iter([x, y, z]);
                if g.components_within(&rest).len() < 2 {
                    continue;
                }
                match conn3_claims(g, x, y, z) {
                    Ok(report) => {
                        digest.s_star_values.push(report.cut_dominators_union);
                        if !report.all_passed() {
                            return (
                                ClaimFlag::Fail,
                                Some(format!("cut {{{x},{y},{z}}}: {report:?}")),
                            );
                        }
                    }
                    Err(e) => return (ClaimFlag::Fail, Some(e.to_string())),
                }
            }
        }
    }
    (ClaimFlag::Pass, None)
}

/// Single-graph verdict under the conjecture check alone.
pub fn verify_conjecture(g: &Graph) -> GraphVerdict {
    evaluate(g, &[CheckKind::Conjecture]).verdict
}
