//! Per-graph verdict records.
//!
//! One `GraphVerdict` is emitted per scanned graph as a JSONL object with
//! a fixed key order (the struct field order below). Finite distances and
//! domination numbers serialize as numbers, infinite ones as `null`;
//! claim flags are `"pass"`, `"fail"`, or `"n/a"`.

use edgecrit::domination::DominationNumber;
use edgecrit::metrics::Distance;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of one named claim on one graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClaimFlag {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl ClaimFlag {
    pub fn from_bool(ok: bool) -> ClaimFlag {
        if ok {
            ClaimFlag::Pass
        } else {
            ClaimFlag::Fail
        }
    }
}

impl fmt::Display for ClaimFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimFlag::Pass => write!(f, "pass"),
            ClaimFlag::Fail => write!(f, "fail"),
            ClaimFlag::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Everything recorded about one scanned graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphVerdict {
    pub graph6: String,
    pub n: usize,
    pub m_complement: usize,
    pub class: String,
    pub diam: Distance,
    pub gamma_t: DominationNumber,
    pub connectivity: usize,
    pub bound_ok: bool,
    pub equality: bool,
    pub extremal_balanced_bipartite: bool,
    pub claim_flags: BTreeMap<String, ClaimFlag>,
}

impl GraphVerdict {
    /// JSONL line, fixed key order, no trailing newline.
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("verdicts always serialize")
    }

    /// Flat CSV row matching [`csv_header`].
    pub fn to_csv_row(&self) -> String {
        let flags = self
            .claim_flags
            .iter()
            .map(|(name, flag)| format!("{name}={flag}"))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m_complement,
            self.class,
            self.diam,
            self.gamma_t,
            self.connectivity,
            self.bound_ok,
            self.equality,
            self.extremal_balanced_bipartite,
            flags
        )
    }
}

pub fn csv_header() -> &'static str {
    "graph6,n,m_complement,class,diam,gamma_t,connectivity,bound_ok,equality,extremal_balanced_bipartite,claim_flags"
}

/// A failed check on a specific graph; any violation fails the campaign.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub check: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.check, self.graph6, self.detail)
    }
}
