//! Campaign execution: stream graphs, filter, check, persist, summarize.
//!
//! Graphs are pulled from the stream in batches, checked in parallel, and
//! written back in input order, so the JSONL output is byte-identical
//! across runs regardless of the worker count. External streams are
//! deduplicated by canonical form unless the caller vouches for them.

use crate::checks::{evaluate_with, CheckKind, Evaluation, GraphFacts};
use crate::verdict::Violation;
use edgecrit::enumerate::{canonical_form, GraphStream, StreamSource, CANONICAL_MAX};
use edgecrit::metrics::Distance;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use thiserror::Error;

const BATCH: usize = 2048;

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Stream(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

/// Restricting a scan to a hypothesis class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Filter {
    /// `class=3gt|3gt2|3gt3|d2c|star|4sc`
    Class(ClassFilter),
    /// `kappa=K`
    Kappa(usize),
    /// `delta>=K`
    MinDegree(usize),
    /// `indepcut>=K`
    IndependentCutAtLeast(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassFilter {
    ThreeGt,
    ThreeGtDiam2,
    ThreeGtDiam3,
    Diameter2Critical,
    Star,
    FourSupercritical,
}

impl Filter {
    pub fn matches(&self, facts: &GraphFacts) -> bool {
        match self {
            Filter::Class(c) => c.matches(facts),
            Filter::Kappa(k) => facts.connectivity == *k,
            Filter::MinDegree(d) => facts.min_degree >= *d,
            Filter::IndependentCutAtLeast(_) => facts.has_indep_cut3 == Some(true),
        }
    }
}

impl ClassFilter {
    fn matches(&self, facts: &GraphFacts) -> bool {
        match self {
            ClassFilter::ThreeGt => facts.is_3gt,
            ClassFilter::ThreeGtDiam2 => facts.is_3gt && facts.diam == Distance::Finite(2),
            ClassFilter::ThreeGtDiam3 => facts.is_3gt && facts.diam == Distance::Finite(3),
            ClassFilter::Diameter2Critical => facts.is_d2c,
            ClassFilter::Star => facts.flags.star && facts.is_d2c,
            ClassFilter::FourSupercritical => facts.flags.four_supercritical && facts.is_d2c,
        }
    }
}

/// Parse a `key=value[,key=value..]` filter specification.
pub fn parse_filters(spec: &str) -> Result<Vec<Filter>, String> {
    let mut out = Vec::new();
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let filter = if let Some(class) = item.strip_prefix("class=") {
            Filter::Class(match class {
                "3gt" => ClassFilter::ThreeGt,
                "3gt2" => ClassFilter::ThreeGtDiam2,
                "3gt3" => ClassFilter::ThreeGtDiam3,
                "d2c" => ClassFilter::Diameter2Critical,
                "star" => ClassFilter::Star,
                "4sc" => ClassFilter::FourSupercritical,
                other => return Err(format!("unknown class filter '{other}'")),
            })
        } else if let Some(k) = item.strip_prefix("kappa=") {
            Filter::Kappa(k.parse().map_err(|_| format!("bad kappa '{k}'"))?)
        } else if let Some(d) = item.strip_prefix("delta>=") {
            Filter::MinDegree(d.parse().map_err(|_| format!("bad delta bound '{d}'"))?)
        } else if let Some(c) = item.strip_prefix("indepcut>=") {
            let c: usize = c.parse().map_err(|_| format!("bad cut bound '{c}'"))?;
            if c != 3 {
                return Err("only indepcut>=3 is supported".into());
            }
            Filter::IndependentCutAtLeast(c)
        } else {
            return Err(format!("unrecognized filter '{item}'"));
        };
        out.push(filter);
    }
    Ok(out)
}

/// Verdict output encoding.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<OutputFormat, String> {
        match s {
            "jsonl" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format '{other}' (expected jsonl or csv)")),
        }
    }
}

/// How to treat possible isomorphs in external streams.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DedupePolicy {
    /// Deduplicate file/stdin sources; generated streams are isomorph-free.
    #[default]
    Auto,
    /// Deduplicate regardless of source.
    Always,
    /// Trust the stream to be isomorph-free.
    AssumeIsoFree,
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub source: GraphStream,
    pub checks: Vec<CheckKind>,
    pub filters: Vec<Filter>,
    pub jobs: usize,
    pub format: OutputFormat,
    pub dedupe: DedupePolicy,
}

impl CampaignConfig {
    pub fn new(source: GraphStream, checks: Vec<CheckKind>) -> CampaignConfig {
        CampaignConfig {
            source,
            checks,
            filters: Vec::new(),
            jobs: 0,
            format: OutputFormat::default(),
            dedupe: DedupePolicy::default(),
        }
    }
}

/// Aggregate status of one check over a whole campaign.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The hypothesis class was empty; nothing was actually verified.
    Vacuous,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Vacuous => write!(f, "VACUOUS"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CheckOutcome {
    /// Graphs on which the check actually applied (flag was not `n/a`).
    pub applicable: usize,
    pub failed: usize,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct CampaignSummary {
    pub scanned: usize,
    pub class_counts: BTreeMap<String, usize>,
    pub parity_counts: BTreeMap<String, usize>,
    pub hypothesis_counts: BTreeMap<String, usize>,
    pub check_outcomes: BTreeMap<String, CheckOutcome>,
    pub s_star_values: BTreeMap<usize, usize>,
    pub partition_equality_instances: usize,
    pub violations: Vec<Violation>,
}

impl CampaignSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// 0 = every check passed, 1 = at least one violation.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Human-readable per-check lines plus violations.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("scanned {} graphs\n", self.scanned));
        for (name, outcome) in &self.check_outcomes {
            out.push_str(&format!(
                "check {:<16} {:<8} (applicable: {}, failed: {})\n",
                name, outcome.status, outcome.applicable, outcome.failed
            ));
        }
        for (class, count) in &self.hypothesis_counts {
            out.push_str(&format!("class {class}: {count}\n"));
        }
        for v in &self.violations {
            out.push_str(&format!("VIOLATION {v}\n"));
        }
        out
    }

    fn absorb(&mut self, eval: &Evaluation) {
        self.scanned += 1;
        *self
            .class_counts
            .entry(eval.facts.class.clone())
            .or_default() += 1;
        let parity = if eval.facts.n.is_multiple_of(2) {
            "even"
        } else {
            "odd"
        };
        *self.parity_counts.entry(parity.into()).or_default() += 1;

        let f = &eval.facts;
        let mut bump = |name: &str, hit: bool| {
            if hit {
                *self.hypothesis_counts.entry(name.into()).or_default() += 1;
            } else {
                self.hypothesis_counts.entry(name.into()).or_default();
            }
        };
        bump("d2c", f.is_d2c);
        bump("d2c_equality", f.is_d2c && f.m == f.quarter_bound);
        bump("3gt", f.is_3gt);
        bump("3gt_kappa1", f.is_3gt && f.connectivity == 1);
        bump("3gt_kappa2", f.is_3gt && f.connectivity == 2);
        bump("3gt_kappa3", f.is_3gt && f.connectivity == 3);
        bump(
            "3gt_delta3_indepcut3",
            f.is_3gt && f.min_degree >= 3 && f.has_indep_cut3 == Some(true),
        );
        bump("indep_cut_unevaluable", f.has_indep_cut3.is_none());
        bump(
            "3gt_diam2_kappa2",
            f.is_3gt && f.diam == Distance::Finite(2) && f.connectivity == 2,
        );
        bump(
            "3gt_diam2_kappa3",
            f.is_3gt && f.diam == Distance::Finite(2) && f.connectivity == 3,
        );

        for value in &eval.digest.s_star_values {
            *self.s_star_values.entry(*value).or_default() += 1;
        }
        self.partition_equality_instances += eval.digest.partition_equality_instances;

        for (name, flag) in &eval.verdict.claim_flags {
            let entry = self
                .check_outcomes
                .entry(name.clone())
                .or_insert(CheckOutcome {
                    applicable: 0,
                    failed: 0,
                    status: CheckStatus::Vacuous,
                });
            match flag {
                crate::verdict::ClaimFlag::Pass => entry.applicable += 1,
                crate::verdict::ClaimFlag::Fail => {
                    entry.applicable += 1;
                    entry.failed += 1;
                }
                crate::verdict::ClaimFlag::NotApplicable => {}
            }
        }
        self.violations.extend(eval.violations.iter().cloned());
    }

    fn finalize(&mut self) {
        for outcome in self.check_outcomes.values_mut() {
            outcome.status = if outcome.failed > 0 {
                CheckStatus::Fail
            } else if outcome.applicable == 0 {
                CheckStatus::Vacuous
            } else {
                CheckStatus::Pass
            };
        }
    }

    /// Merge another summary (for multi-order campaigns).
    pub fn merge(&mut self, other: CampaignSummary) {
        self.scanned += other.scanned;
        for (k, v) in other.class_counts {
            *self.class_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.parity_counts {
            *self.parity_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.hypothesis_counts {
            *self.hypothesis_counts.entry(k).or_default() += v;
        }
        for (k, v) in other.s_star_values {
            *self.s_star_values.entry(k).or_default() += v;
        }
        self.partition_equality_instances += other.partition_equality_instances;
        for (name, outcome) in other.check_outcomes {
            let entry = self.check_outcomes.entry(name).or_insert(CheckOutcome {
                applicable: 0,
                failed: 0,
                status: CheckStatus::Vacuous,
            });
            entry.applicable += outcome.applicable;
            entry.failed += outcome.failed;
        }
        self.violations.extend(other.violations);
        self.finalize();
    }
}

/// Run a campaign, writing one verdict per scanned graph to `out`.
pub fn run_campaign<W: Write>(
    cfg: &CampaignConfig,
    out: &mut W,
) -> Result<CampaignSummary, CampaignError> {
    if cfg.checks.is_empty() {
        return Err(CampaignError::Config("no checks selected".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CampaignError::Config(e.to_string()))?;

    let dedupe = match (&cfg.source.source, cfg.dedupe) {
        (_, DedupePolicy::Always) => true,
        (_, DedupePolicy::AssumeIsoFree) => false,
        (StreamSource::Generated(_), DedupePolicy::Auto) => false,
        (_, DedupePolicy::Auto) => true,
    };

    let mut iter = cfg
        .source
        .items()
        .map_err(|e| CampaignError::Stream(e.to_string()))?;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut summary = CampaignSummary::default();
    if cfg.format == OutputFormat::Csv {
        writeln!(out, "{}", crate::verdict::csv_header())?;
    }

    loop {
        let mut batch = Vec::with_capacity(BATCH);
        while batch.len() < BATCH {
            match iter.next() {
                None => break,
                Some(Err(e)) => return Err(CampaignError::Stream(e.to_string())),
                Some(Ok(g)) => {
                    if g.n() == 0 {
                        return Err(CampaignError::Stream(
                            "streams must not contain order-0 graphs".into(),
                        ));
                    }
                    if dedupe {
                        if g.n() > CANONICAL_MAX {
                            return Err(CampaignError::Stream(format!(
                                "cannot deduplicate a {}-vertex graph (cap {CANONICAL_MAX}); \
                                 pass --assume-isofree to skip deduplication",
                                g.n()
                            )));
                        }
                        let form = canonical_form(&g).expect("under cap");
                        if !seen.insert(form) {
                            continue;
                        }
                    }
                    batch.push(g);
                }
            }
        }
        if batch.is_empty() {
            break;
        }
        let evals: Vec<Option<Evaluation>> = pool.install(|| {
            batch
                .par_iter()
                .map(|g| {
                    let f = crate::checks::facts(g);
                    if cfg.filters.iter().all(|flt| flt.matches(&f)) {
                        Some(evaluate_with(g, f, &cfg.checks))
                    } else {
                        None
                    }
                })
                .collect()
        });
        for eval in evals.into_iter().flatten() {
            match cfg.format {
                OutputFormat::Jsonl => writeln!(out, "{}", eval.verdict.to_jsonl())?,
                OutputFormat::Csv => writeln!(out, "{}", eval.verdict.to_csv_row())?,
            }
            summary.absorb(&eval);
        }
    }
    summary.finalize();
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::ALL_CHECKS;

    #[test]
    fn campaign_n5_conjecture() {
        let cfg = CampaignConfig::new(
            GraphStream::generated(5).unwrap(),
            vec![CheckKind::Conjecture],
        );
        let mut out = Vec::new();
        let summary = run_campaign(&cfg, &mut out).unwrap();
        assert_eq!(summary.scanned, 34);
        assert!(summary.passed());
        assert_eq!(out.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count(), 34);
        let outcome = &summary.check_outcomes["conjecture"];
        assert_eq!(outcome.status, CheckStatus::Pass);
        assert!(outcome.applicable > 0);
    }

    #[test]
    fn campaign_is_deterministic_across_job_counts() {
        let run = |jobs: usize| -> (Vec<u8>, CampaignSummary) {
            let mut cfg = CampaignConfig::new(
                GraphStream::generated(6).unwrap(),
                ALL_CHECKS.to_vec(),
            );
            cfg.jobs = jobs;
            let mut out = Vec::new();
            let summary = run_campaign(&cfg, &mut out).unwrap();
            (out, summary)
        };
        let (out1, s1) = run(1);
        let (out4, s4) = run(4);
        assert_eq!(out1, out4, "JSONL must not depend on the worker count");
        assert_eq!(s1.scanned, s4.scanned);
        assert_eq!(s1.violations, s4.violations);
    }

    #[test]
    fn filters_restrict_the_stream() {
        let mut cfg = CampaignConfig::new(
            GraphStream::generated(5).unwrap(),
            vec![CheckKind::Bounds],
        );
        cfg.filters = parse_filters("class=3gt,kappa=2").unwrap();
        let mut out = Vec::new();
        let summary = run_campaign(&cfg, &mut out).unwrap();
        // C5 is the only 3-γt-critical graph with κ=2 on five vertices.
        assert_eq!(summary.scanned, 1);
        assert!(summary.passed());
    }

    #[test]
    fn empty_check_list_is_rejected() {
        let cfg = CampaignConfig::new(GraphStream::generated(4).unwrap(), Vec::new());
        let mut out = Vec::new();
        assert!(matches!(
            run_campaign(&cfg, &mut out),
            Err(CampaignError::Config(_))
        ));
    }

    #[test]
    fn vacuous_hypothesis_classes_are_reported() {
        // At n = 4 nothing is 3-γt-critical, so the claims checks are vacuous.
        let cfg = CampaignConfig::new(
            GraphStream::generated(4).unwrap(),
            vec![CheckKind::Claims],
        );
        let mut out = Vec::new();
        let summary = run_campaign(&cfg, &mut out).unwrap();
        assert!(summary.passed());
        assert_eq!(
            summary.check_outcomes["cut_domination"].status,
            CheckStatus::Vacuous
        );
        assert_eq!(summary.hypothesis_counts["3gt"], 0);
    }
}
