//! Exhaustive and sampled sweeps over labelled graphs.

mod enumerate;
mod properties;

pub use enumerate::*;
pub use properties::{Property, Tally};

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};

/// Largest `n` swept exhaustively when no sample size is given.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 7;
/// Largest `n` for which pair properties are swept exhaustively (`2^20` pairs).
pub const MAX_EXHAUSTIVE_PAIR_VERTICES: usize = 5;
/// Mismatches kept in a report; `mismatch_count` has the full total.
pub const MISMATCH_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    /// Edge-bit mask of the failing graph.
    pub mask: u64,
    /// Second graph for pair properties.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<u64>,
    pub check: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub property: String,
    pub n: usize,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checked: u64,
    pub mismatch_count: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(default, skip_serializing_if = "Tally::is_empty")]
    pub tallies: Tally,
    /// Wall time; left out unless requested so that reports are reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatch_count == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyRequest {
    pub property: Property,
    pub n: usize,
    pub sample: Option<u64>,
    pub seed: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub timing: bool,
}

impl VerifyRequest {
    pub fn new(property: Property, n: usize) -> Self {
        Self {
            property,
            n,
            sample: None,
            seed: 0,
            jobs: None,
            timing: false,
        }
    }

    pub fn sample(mut self, sample: u64, seed: u64) -> Self {
        self.sample = Some(sample);
        self.seed = seed;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

#[derive(Default)]
struct Partial {
    checked: u64,
    mismatch_count: u64,
    mismatches: Vec<Mismatch>,
    tallies: Tally,
}

impl Partial {
    fn record(&mut self, mask: u64, partner: Option<u64>, outcome: std::result::Result<(), &str>) {
        self.checked += 1;
        if let Err(check) = outcome {
            self.mismatch_count += 1;
            if self.mismatches.len() < MISMATCH_CAP {
                self.mismatches.push(Mismatch {
                    mask,
                    partner,
                    check: check.to_string(),
                });
            }
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        self.mismatch_count += other.mismatch_count;
        let room = MISMATCH_CAP - self.mismatches.len();
        self.mismatches
            .extend(other.mismatches.into_iter().take(room));
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        self
    }
}

/// Convenience for `verify(VerifyRequest { .. })` on the global pool.
pub fn verify_property(
    property: Property,
    n: usize,
    sample: Option<u64>,
    seed: Option<u64>,
) -> Result<VerificationReport> {
    verify(&VerifyRequest {
        sample,
        seed: seed.unwrap_or(0),
        ..VerifyRequest::new(property, n)
    })
}

/// Runs one property over the exhaustive or sampled stream. The report is a
/// function of `(property, n, sample, seed)` only; the job count does not
/// affect it.
pub fn verify(req: &VerifyRequest) -> Result<VerificationReport> {
    let p = req.property;
    let exhaustive_cap = if p.is_pair_property() {
        MAX_EXHAUSTIVE_PAIR_VERTICES
    } else {
        MAX_EXHAUSTIVE_VERTICES
    };
    if req.sample.is_none() && req.n > exhaustive_cap {
        return Err(Error::InvalidParameter(format!(
            "{p} at n = {} needs a sample size (exhaustive up to n = {exhaustive_cap})",
            req.n
        )));
    }
    let stream = MaskStream::new(req.n, req.seed)?;
    if req.sample == Some(0) {
        return Err(Error::InvalidParameter(
            "sample size must be positive".into(),
        ));
    }

    let start = Instant::now();
    let run = || match req.sample {
        None => exhaustive(p, req.n),
        Some(s) => sampled(p, req.n, s, stream),
    };
    let partial = match req.jobs {
        None => run(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run),
    };
    Ok(VerificationReport {
        property: p.to_string(),
        n: req.n,
        mode: if req.sample.is_some() {
            Mode::Sampled
        } else {
            Mode::Exhaustive
        },
        sample: req.sample,
        seed: req.sample.map(|_| req.seed),
        checked: partial.checked,
        mismatch_count: partial.mismatch_count,
        mismatches: partial.mismatches,
        tallies: partial.tallies,
        wall_ms: req.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn fold_chunks(total: u64, work: impl Fn(u64, u64, &mut Partial) + Sync) -> Partial {
    chunked(total)
        .into_par_iter()
        .map(|(a, b)| {
            let mut part = Partial::default();
            work(a, b, &mut part);
            part
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Partial::default(), Partial::merge)
}

fn exhaustive(p: Property, n: usize) -> Partial {
    let graphs = 1u64 << pair_count(n);
    if p.is_pair_property() {
        let bits = pair_count(n);
        fold_chunks(graphs * graphs, |a, b, part| {
            for i in a..b {
                let (m1, m2) = (i >> bits, i & (graphs - 1));
                let g = Graph::from_mask(n, m1).unwrap();
                let h = Graph::from_mask(n, m2).unwrap();
                let outcome = p.check_pair(&g, &h, &mut part.tallies);
                part.record(m1, Some(m2), outcome);
            }
        })
    } else {
        fold_chunks(graphs, |a, b, part| {
            for m in a..b {
                let g = Graph::from_mask(n, m).unwrap();
                let outcome = p.check(&g, &mut part.tallies);
                part.record(m, None, outcome);
            }
        })
    }
}

fn sampled(p: Property, n: usize, sample: u64, stream: MaskStream) -> Partial {
    fold_chunks(sample, |a, b, part| {
        for (m1, m2) in stream.pairs(a, b) {
            let g = Graph::from_mask(n, m1).unwrap();
            if p.is_pair_property() {
                let h = Graph::from_mask(n, m2).unwrap();
                let outcome = p.check_pair(&g, &h, &mut part.tallies);
                part.record(m1, Some(m2), outcome);
            } else {
                let outcome = p.check(&g, &mut part.tallies);
                part.record(m1, None, outcome);
            }
        }
    })
}

/// Re-runs a single check, e.g. to replay a reported mismatch.
pub fn replay(
    property: Property,
    g: &Graph,
    partner: Option<&Graph>,
) -> std::result::Result<(), String> {
    let mut tally = Tally::new();
    let outcome = match (property.is_pair_property(), partner) {
        (true, Some(h)) => property.check_pair(g, h, &mut tally),
        (true, None) => return Err(format!("{property} needs a second graph")),
        (false, _) => property.check(g, &mut tally),
    };
    outcome.map_err(str::to_string)
}
