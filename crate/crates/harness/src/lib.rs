//! Verification harness: composes the kernel predicates into campaigns
//! over exhaustive or external graph streams, persists JSONL verdicts,
//! and aggregates summaries with explicit vacuity reporting.

pub mod campaign;
pub mod checks;
pub mod explain;
pub mod verdict;

pub use campaign::{
    parse_filters, run_campaign, CampaignConfig, CampaignError, CampaignSummary, CheckStatus,
    DedupePolicy, Filter, OutputFormat,
};
pub use checks::{evaluate, evaluate_with, facts, verify_conjecture, CheckKind, ALL_CHECKS};
pub use explain::explain;
pub use verdict::{ClaimFlag, GraphVerdict, Violation};
