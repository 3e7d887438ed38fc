use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use clawfree_core::edge_graph::{bipartition, edge_graph};
use clawfree_core::harness::{self, Property, VerifyRequest};
use clawfree_core::io::{emit_graph6, parse_graph_literal};
use clawfree_core::recon::{
    hypomorphic_utc, prop_down_exhaustive, prop_down_sampled, reconstructible_utc,
    reconstruction_sweep, Reconstruction,
};
use clawfree_core::schema::{DecomposeDoc, DecompositionDoc};
use clawfree_core::theorem::{all_decompositions, classify, decompose};
use clawfree_core::{h3, Graph};

/// Default sample size for sweeps above the exhaustive range.
const DEFAULT_SAMPLE: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "clawfree",
    version,
    about = "Claw/co-claw-free graphs: recognition, decomposition, reconstruction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Membership certificate: a structural case or a claw witness.
    Classify { graph: String },
    /// Boolean-sum decomposition, or an odd-cycle obstruction.
    Decompose {
        graph: String,
        /// Every decomposition instead of the canonical one.
        #[arg(long)]
        all: bool,
        /// With --all, keep both members of each (G, G2) / (G2, G) pair.
        #[arg(long, requires = "all")]
        keep_swaps: bool,
    },
    /// Homogeneous triples.
    H3 { graph: String },
    /// The edge-graph S(U) and its canonical bipartition.
    EdgeGraph { graph: String },
    /// Sweep a property over all (or sampled) labelled graphs.
    Verify {
        property: String,
        #[arg(long)]
        n: usize,
        /// Random graphs to check; defaults to 1000000 above the exhaustive range.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Include wall time (makes the report run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Re-run one property on a single graph (or pair), e.g. a reported mismatch.
    Check {
        property: String,
        graph: String,
        partner: Option<String>,
    },
    /// Reconstruction up to complementation.
    Recon {
        #[command(subcommand)]
        command: ReconCommand,
    },
}

#[derive(Subcommand)]
enum ReconCommand {
    /// Sweep all graphs on v vertices (or one graph with --graph).
    Reconstructible {
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "v")]
        graph: Option<String>,
    },
    Hypomorphic {
        g1: String,
        g2: String,
        #[arg(long)]
        k: usize,
    },
    /// Check "k-hypomorphic implies t-hypomorphic" over pairs.
    Propdown {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Outcome of a command that parsed and ran.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(arg: &str) -> Result<Graph> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        None => arg.to_string(),
    };
    parse_graph_literal(&text).with_context(|| format!("parsing graph {arg:?}"))
}

fn emit(value: &impl Serialize) -> Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()?
            .install(f)),
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Classify { graph } => {
            let u = read_graph(&graph)?;
            emit(&classify(&u))?;
        }
        Command::Decompose {
            graph,
            all,
            keep_swaps,
        } => {
            let u = read_graph(&graph)?;
            if all {
                match decompose(&u) {
                    Err(o) => emit(&DecomposeDoc::new(&Err(o)))?,
                    Ok(_) => {
                        let docs: Vec<DecompositionDoc> = all_decompositions(&u, !keep_swaps)?
                            .iter()
                            .map(Into::into)
                            .collect();
                        emit(&json!({ "count": docs.len(), "decompositions": docs }))?;
                    }
                }
            } else {
                emit(&DecomposeDoc::new(&decompose(&u)))?;
            }
        }
        Command::H3 { graph } => emit(&h3(&read_graph(&graph)?))?,
        Command::EdgeGraph { graph } => {
            let u = read_graph(&graph)?;
            let s = edge_graph(&u);
            let mut doc = json!({
                "base": emit_graph6(&u),
                "vertices": s.edges_of_base(),
                "adjacency": s.adjacent_pairs().collect::<Vec<_>>(),
            });
            match bipartition(&s) {
                Ok(c) => {
                    doc["bipartite"] = Value::Bool(true);
                    doc["coloring"] = serde_json::to_value(&c)?;
                }
                Err(cycle) => {
                    doc["bipartite"] = Value::Bool(false);
                    doc["odd_cycle"] = serde_json::to_value(&cycle)?;
                }
            }
            emit(&doc)?;
        }
        Command::Verify {
            property,
            n,
            sample,
            seed,
            jobs,
            timing,
        } => {
            let property: Property = property.parse()?;
            let exhaustive_cap = if property.is_pair_property() {
                harness::MAX_EXHAUSTIVE_PAIR_VERTICES
            } else {
                harness::MAX_EXHAUSTIVE_VERTICES
            };
            let sample = sample.or((n > exhaustive_cap).then_some(DEFAULT_SAMPLE));
            let report = harness::verify(&VerifyRequest {
                property,
                n,
                sample,
                seed,
                jobs,
                timing,
            })?;
            emit(&report)?;
            if !report.passed() {
                return Ok(Outcome::Fail);
            }
        }
        Command::Check {
            property,
            graph,
            partner,
        } => {
            let property: Property = property.parse()?;
            let g = read_graph(&graph)?;
            let h = partner.as_deref().map(read_graph).transpose()?;
            if property.is_pair_property() && h.is_none() {
                bail!("{property} needs a second graph");
            }
            let outcome = harness::replay(property, &g, h.as_ref());
            emit(&json!({
                "property": property.to_string(),
                "graph": emit_graph6(&g),
                "passed": outcome.is_ok(),
                "check": outcome.as_ref().err(),
            }))?;
            if outcome.is_err() {
                return Ok(Outcome::Fail);
            }
        }
        Command::Recon { command } => return recon(command),
    }
    Ok(Outcome::Pass)
}

fn recon(command: ReconCommand) -> Result<Outcome> {
    match command {
        ReconCommand::Reconstructible { v, k, graph } => match (v, graph) {
            (Some(v), None) => emit(&reconstruction_sweep(v, k)?)?,
            (None, Some(graph)) => {
                let g = read_graph(&graph)?;
                let doc = match reconstructible_utc(&g, k)? {
                    Reconstruction::Reconstructible => json!({ "k": k, "reconstructible": true }),
                    Reconstruction::Counterexample(h) => json!({
                        "k": k,
                        "reconstructible": false,
                        "counterexample": emit_graph6(&h),
                    }),
                };
                emit(&doc)?;
            }
            _ => bail!("give either --v or --graph"),
        },
        ReconCommand::Hypomorphic { g1, g2, k } => {
            let report = hypomorphic_utc(&read_graph(&g1)?, &read_graph(&g2)?, k)?;
            emit(&report)?;
        }
        ReconCommand::Propdown {
            v,
            k,
            t,
            sample,
            seed,
            jobs,
        } => {
            let report = with_jobs(jobs, || match sample {
                None => prop_down_exhaustive(v, k, t),
                Some(s) => prop_down_sampled(v, k, t, s, seed),
            })??;
            emit(&report)?;
            if !report.violations.is_empty() {
                return Ok(Outcome::Fail);
            }
        }
    }
    Ok(Outcome::Pass)
}
