//! `edgecrit` command-line interface.
//!
//! Exit codes: 0 = all checks passed, 1 = at least one violation (a
//! potential counterexample), 2 = usage or configuration error.

use clap::{Args, Parser, Subcommand};
use edgecrit::enumerate::{GraphStream, GENERATE_MAX};
use edgecrit::g6;
use edgecrit::partition::{association_bound_check, build_association, AssociationError, Partition};
use edgecrit::structure::independent_cuts;
use edgecrit::{Graph, VertexSet};
use edgecrit_harness::{
    explain, parse_filters, run_campaign, verify_conjecture, CampaignConfig, CampaignSummary,
    CheckKind, DedupePolicy, OutputFormat, ALL_CHECKS,
};
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "edgecrit",
    version,
    about = "Exhaustive verification of diameter-2 edge-criticality and total domination edge criticality on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph (or each stdin line with '-') and print its verdict.
    Classify {
        /// graph6 record, or '-' to read newline-delimited records from stdin.
        graph6: String,
    },
    /// Run verification campaigns over generated or external graph streams.
    Check {
        /// Comma-separated checks: conjecture,duality,trichotomy,supercritical,
        /// diameter-bound,dichotomy,partition,bounds,claims — or 'all'.
        #[arg(long, value_delimiter = ',', required = true)]
        checks: Vec<String>,
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Stream the graphs of one order that survive the given filters.
    Scan {
        #[arg(long)]
        n: usize,
        /// Comma-separated filters, e.g. class=3gt,kappa=2,delta>=3,indepcut>=3.
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the inclusion-minimal independent vertex cuts of one graph.
    Cuts {
        graph6: String,
        #[arg(long, default_value_t = 3)]
        min_size: usize,
    },
    /// Show the quasi-edge association for one graph and partition.
    Assoc {
        graph6: String,
        /// Part A as comma-separated vertices and ranges, e.g. "0,2-4".
        #[arg(long)]
        partition: String,
    },
    /// Trace one check on one graph, step by step.
    Explain {
        graph6: String,
        #[arg(long)]
        check: String,
    },
}

#[derive(Args)]
struct SourceArgs {
    /// Scan exactly this order (1..=10).
    #[arg(long, conflicts_with_all = ["max_n", "input"])]
    n: Option<usize>,
    /// Scan every order from 1 up to this one.
    #[arg(long, conflicts_with = "input")]
    max_n: Option<usize>,
    /// Read newline-delimited graph6 records from a file ('-' for stdin).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads (0 = all cores). Output is identical either way.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Verdict destination (default: stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Verdict encoding.
    #[arg(long, default_value = "jsonl")]
    format: String,
    /// Force canonical-form deduplication even for generated streams.
    #[arg(long)]
    dedupe: bool,
    /// Trust an external stream to be isomorph-free already.
    #[arg(long, conflicts_with = "dedupe")]
    assume_isofree: bool,
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Classify { graph6 } => classify(&graph6),
        Command::Check {
            checks,
            source,
            run,
        } => check(&checks, source, run),
        Command::Scan { n, filter, output } => scan(n, &filter, output),
        Command::Cuts { graph6, min_size } => cuts(&graph6, min_size),
        Command::Assoc { graph6, partition } => assoc(&graph6, &partition),
        Command::Explain { graph6, check } => {
            let g = parse_graph(&graph6)?;
            print!("{}", explain(&g, &check)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_graph(text: &str) -> anyhow::Result<Graph> {
    let g = g6::decode(text.trim().as_bytes())?;
    anyhow::ensure!(g.n() >= 1, "graphs must have at least one vertex");
    Ok(g)
}

fn classify(graph6: &str) -> anyhow::Result<ExitCode> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if graph6 == "-" {
        for line in std::io::stdin().lock().lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let g = parse_graph(&line)?;
            writeln!(out, "{}", verify_conjecture(&g).to_jsonl())?;
        }
    } else {
        let g = parse_graph(graph6)?;
        writeln!(out, "{}", verify_conjecture(&g).to_jsonl())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_checks(names: &[String]) -> anyhow::Result<Vec<CheckKind>> {
    let mut out = Vec::new();
    for name in names {
        if name == "all" {
            out.extend(ALL_CHECKS);
        } else {
            out.push(name.parse::<CheckKind>().map_err(anyhow::Error::msg)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn check(checks: &[String], source: SourceArgs, run: RunArgs) -> anyhow::Result<ExitCode> {
    let checks = parse_checks(checks)?;
    let format: OutputFormat = run.format.parse().map_err(anyhow::Error::msg)?;
    let dedupe = if run.assume_isofree {
        DedupePolicy::AssumeIsoFree
    } else if run.dedupe {
        DedupePolicy::Always
    } else {
        DedupePolicy::Auto
    };

    let streams: Vec<GraphStream> = match (&source.n, &source.max_n, &source.input) {
        (Some(n), None, None) => vec![GraphStream::generated(*n)?],
        (None, Some(max), None) => {
            anyhow::ensure!(
                (1..=GENERATE_MAX).contains(max),
                "--max-n must be in 1..={GENERATE_MAX}"
            );
            (1..=*max).map(|n| GraphStream::generated(n).unwrap()).collect()
        }
        (None, None, Some(path)) if path.as_os_str() == "-" => vec![GraphStream::stdin()],
        (None, None, Some(path)) => vec![GraphStream::from_file(path.clone())],
        _ => anyhow::bail!("exactly one of --n, --max-n, --input must be given"),
    };

    let mut sink: Box<dyn Write> = match &run.output {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };

    let mut total = CampaignSummary::default();
    for stream in streams {
        let mut cfg = CampaignConfig::new(stream, checks.clone());
        cfg.jobs = run.jobs;
        cfg.format = format;
        cfg.dedupe = dedupe;
        let summary = run_campaign(&cfg, &mut sink)?;
        total.merge(summary);
    }
    sink.flush()?;

    eprint!("{}", total.render());
    eprintln!("summary: {}", serde_json::to_string(&total)?);
    Ok(ExitCode::from(total.exit_code() as u8))
}

fn scan(n: usize, filter: &str, output: Option<PathBuf>) -> anyhow::Result<ExitCode> {
    let filters = parse_filters(filter).map_err(anyhow::Error::msg)?;
    let mut sink: Box<dyn Write> = match &output {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };
    let mut matched = 0usize;
    let mut scanned = 0usize;
    for g in GraphStream::generated(n)?.items()? {
        let g = g?;
        scanned += 1;
        let f = edgecrit_harness::facts(&g);
        if filters.iter().all(|flt| flt.matches(&f)) {
            matched += 1;
            writeln!(sink, "{}", f.graph6)?;
        }
    }
    sink.flush()?;
    eprintln!("scanned {scanned}, matched {matched}");
    Ok(ExitCode::SUCCESS)
}

fn cuts(graph6: &str, min_size: usize) -> anyhow::Result<ExitCode> {
    let g = parse_graph(graph6)?;
    let found = independent_cuts(&g, min_size)?;
    for info in &found.cuts {
        let comps = info
            .components_after
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        println!("cut {} -> components {comps}", info.cut);
    }
    eprintln!(
        "{} minimal independent cut(s) of size >= {min_size}; exhaustive: {}",
        found.cuts.len(),
        found.exhaustive
    );
    Ok(ExitCode::SUCCESS)
}

fn parse_vertex_spec(spec: &str) -> anyhow::Result<VertexSet> {
    let mut set = VertexSet::empty();
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        match item.split_once('-') {
            Some((lo, hi)) => {
                let lo: usize = lo.trim().parse()?;
                let hi: usize = hi.trim().parse()?;
                anyhow::ensure!(lo <= hi, "empty range '{item}'");
                for v in lo..=hi {
                    set.insert(v);
                }
            }
            None => set.insert(item.trim().parse()?),
        }
    }
    anyhow::ensure!(!set.is_empty(), "partition spec selects no vertices");
    Ok(set)
}

fn assoc(graph6: &str, partition: &str) -> anyhow::Result<ExitCode> {
    let g = parse_graph(graph6)?;
    let a = parse_vertex_spec(partition)?;
    let p = Partition::new(&g, a)?;
    println!("partition {p}");
    match build_association(&g, &p) {
        Err(AssociationError::HypothesisFailure(e)) => {
            println!("hypothesis failure: missing edge {e} has no crossing quasi-edge");
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ AssociationError::InjectivityViolation { .. }) => {
            println!("INJECTIVITY VIOLATION: {e}");
            Ok(ExitCode::from(1))
        }
        Ok(map) => {
            for (missing, entry) in &map.entries {
                println!(
                    "missing {missing} -> quasi-edge {} (arrow {})",
                    entry.quasi_edge, entry.arrow
                );
            }
            let unmatched = map
                .unmatched
                .iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            println!("unmatched crossing edges: [{unmatched}]");
            let bound = association_bound_check(&g, &p).expect("association just succeeded");
            println!(
                "|E(G^c)| = {} <= |A||B| = {}: {}; <= ⌊n²/4⌋ = {}: {}",
                bound.complement_edges,
                bound.part_product,
                bound.within_product,
                bound.quarter_bound,
                bound.within_quarter
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
