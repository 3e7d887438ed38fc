//! Isomorphism, hypomorphy and reconstructibility up to complementation.
//!
//! Graphs on at most [`TABLE_VERTICES`] vertices are compared through a
//! precomputed table mapping every edge mask to the id of its class up to
//! isomorphism and complementation, so the inner loops of the sweeps are
//! table lookups.

use std::collections::HashMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{pair_count, Graph};
use crate::iso::{canonical_code, is_isomorphic, MAX_CANONICAL_VERTICES};

/// Largest vertex count served by the precomputed class tables.
pub const TABLE_VERTICES: usize = 6;

/// Largest vertex count accepted by [`reconstructible_utc`].
pub const MAX_RECONSTRUCT_VERTICES: usize = 6;

fn class_table(k: usize) -> &'static [u32] {
    static TABLES: [OnceLock<Vec<u32>>; TABLE_VERTICES + 1] =
        [const { OnceLock::new() }; TABLE_VERTICES + 1];
    TABLES[k].get_or_init(|| {
        let m = pair_count(k);
        let full = (1u64 << m) - 1;
        let mut table = vec![u32::MAX; 1 << m];
        let mut next = 0u32;
        let mut by_code = HashMap::new();
        for mask in 0..1u64 << m {
            if table[mask as usize] != u32::MAX {
                continue;
            }
            let g = Graph::from_mask(k, mask).unwrap();
            let code = canonical_code(&g)
                .unwrap()
                .min(canonical_code(&g.complement()).unwrap());
            let id = *by_code.entry(code).or_insert_with(|| {
                next += 1;
                next - 1
            });
            table[mask as usize] = id;
            // the complement is in the same class
            table[(full ^ mask) as usize] = id;
        }
        table
    })
}

/// Class id up to isomorphism and complementation of the graph induced on
/// `verts` (at most [`TABLE_VERTICES`] of them).
fn induced_class(g: &Graph, verts: &[usize]) -> u32 {
    let k = verts.len();
    let mut mask = 0u64;
    let mut p = 0;
    for i in 0..k {
        let row = g.neighbors(verts[i]);
        for &w in &verts[i + 1..] {
            mask |= (row >> w & 1) << p;
            p += 1;
        }
    }
    class_table(k)[mask as usize]
}

/// Key identifying the class of `g` up to isomorphism and complementation.
fn utc_key(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n <= TABLE_VERTICES {
        let verts: Vec<usize> = (0..n).collect();
        Ok(induced_class(g, &verts) as u64)
    } else if n <= MAX_CANONICAL_VERTICES {
        Ok(canonical_code(g)?
            .value()
            .min(canonical_code(&g.complement())?.value()))
    } else {
        Err(Error::Guard {
            what: "vertex count for class keys",
            value: n,
            max: MAX_CANONICAL_VERTICES,
        })
    }
}

/// Is `h` isomorphic to `g` or to its complement?
pub fn iso_utc(g: &Graph, h: &Graph) -> Result<bool> {
    g.same_order(h)?;
    if g.n() <= TABLE_VERTICES {
        return Ok(utc_key(g)? == utc_key(h)?);
    }
    Ok(is_isomorphic(g, h).is_some() || is_isomorphic(&g.complement(), h).is_some())
}

/// Lexicographic `k`-subsets of `0..n`.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let c = current.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypomorphyReport {
    pub k: usize,
    pub result: bool,
    /// Least `k`-subset on which the induced graphs differ up to
    /// complementation.
    pub failing_subset: Option<Vec<usize>>,
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        Err(Error::Precondition(format!(
            "k = {k} must satisfy 1 <= k <= n = {n}"
        )))
    } else {
        Ok(())
    }
}

/// Are `g` and `h` `k`-hypomorphic up to complementation?
pub fn hypomorphic_utc(g: &Graph, h: &Graph, k: usize) -> Result<HypomorphyReport> {
    g.same_order(h)?;
    check_k(g.n(), k)?;
    for subset in k_subsets(g.n(), k) {
        let same = if k <= TABLE_VERTICES {
            induced_class(g, &subset) == induced_class(h, &subset)
        } else {
            let bits = subset.iter().fold(0u64, |acc, &v| acc | 1 << v);
            iso_utc(&g.induced_bits(bits), &h.induced_bits(bits))?
        };
        if !same {
            return Ok(HypomorphyReport {
                k,
                result: false,
                failing_subset: Some(subset),
            });
        }
    }
    Ok(HypomorphyReport {
        k,
        result: true,
        failing_subset: None,
    })
}

/// Per-subset class ids; two graphs are `k`-hypomorphic up to
/// complementation iff their signatures are equal.
fn signature(g: &Graph, subsets: &[Vec<usize>]) -> Vec<u32> {
    subsets.iter().map(|s| induced_class(g, s)).collect()
}

fn check_table_k(k: usize) -> Result<()> {
    if k > TABLE_VERTICES {
        Err(Error::Guard {
            what: "subset size",
            value: k,
            max: TABLE_VERTICES,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reconstruction {
    Reconstructible,
    /// A graph that is `k`-hypomorphic to the input up to complementation
    /// without being isomorphic to it up to complementation.
    Counterexample(Graph),
}

/// Searches every labelled graph on the same vertex set for a counterexample
/// to `k`-reconstructibility up to complementation; the least mask wins.
pub fn reconstructible_utc(g: &Graph, k: usize) -> Result<Reconstruction> {
    let n = g.n();
    if n > MAX_RECONSTRUCT_VERTICES {
        return Err(Error::Guard {
            what: "vertex count for reconstruction search",
            value: n,
            max: MAX_RECONSTRUCT_VERTICES,
        });
    }
    check_k(n, k)?;
    let subsets: Vec<_> = k_subsets(n, k).collect();
    let target = signature(g, &subsets);
    let key = utc_key(g)?;
    for mask in 0..1u64 << pair_count(n) {
        let h = Graph::from_mask(n, mask)?;
        if signature(&h, &subsets) == target && utc_key(&h)? != key {
            return Ok(Reconstruction::Counterexample(h));
        }
    }
    Ok(Reconstruction::Reconstructible)
}

/// Result of running [`reconstructible_utc`] over every labelled graph on
/// `v` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructionSweep {
    pub v: usize,
    pub k: usize,
    pub checked: u64,
    pub non_reconstructible: u64,
    /// Least-mask graph that is not reconstructible, with its least-mask
    /// counterexample.
    pub first_counterexample: Option<(u64, u64)>,
}

impl ReconstructionSweep {
    pub fn all_reconstructible(&self) -> bool {
        self.non_reconstructible == 0
    }
}

pub fn reconstruction_sweep(v: usize, k: usize) -> Result<ReconstructionSweep> {
    if v > MAX_RECONSTRUCT_VERTICES {
        return Err(Error::Guard {
            what: "vertex count for reconstruction search",
            value: v,
            max: MAX_RECONSTRUCT_VERTICES,
        });
    }
    check_k(v, k)?;
    let subsets: Vec<_> = k_subsets(v, k).collect();
    let total = 1u64 << pair_count(v);
    let mut groups: HashMap<Vec<u32>, Vec<(u64, u64)>> = HashMap::new();
    for mask in 0..total {
        let g = Graph::from_mask(v, mask)?;
        groups
            .entry(signature(&g, &subsets))
            .or_default()
            .push((mask, utc_key(&g)?));
    }
    let mut non_reconstructible = 0;
    let mut first = None;
    // masks within a group are increasing, so per group the least partner of a
    // different class is found directly
    let mut per_graph: Vec<Option<u64>> = vec![None; total as usize];
    for members in groups.values() {
        for &(mask, key) in members {
            per_graph[mask as usize] = members.iter().find(|&&(_, k2)| k2 != key).map(|&(m, _)| m);
        }
    }
    for (mask, partner) in per_graph.iter().enumerate() {
        if let Some(h) = partner {
            non_reconstructible += 1;
            if first.is_none() {
                first = Some((mask as u64, *h));
            }
        }
    }
    Ok(ReconstructionSweep {
        v,
        k,
        checked: total,
        non_reconstructible,
        first_counterexample: first,
    })
}

fn check_down(n: usize, k: usize, t: usize) -> Result<()> {
    check_k(n, k)?;
    if t == 0 || t > k.min(n - k) {
        return Err(Error::Precondition(format!(
            "t = {t} must satisfy 1 <= t <= min(k, v - k) = {}",
            k.min(n - k)
        )));
    }
    Ok(())
}

/// Evaluates "`k`-hypomorphic implies `t`-hypomorphic" (up to
/// complementation) for one pair. `false` means the implication failed.
pub fn check_prop_down(g: &Graph, h: &Graph, k: usize, t: usize) -> Result<bool> {
    g.same_order(h)?;
    check_down(g.n(), k, t)?;
    Ok(!hypomorphic_utc(g, h, k)?.result || hypomorphic_utc(g, h, t)?.result)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropDownReport {
    pub v: usize,
    pub k: usize,
    pub t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pairs_checked: u64,
    /// Pairs that are `k`-hypomorphic up to complementation.
    pub premise_holds: u64,
    /// `(G mask, H mask)` pairs violating the implication, least first.
    pub violations: Vec<(u64, u64)>,
}

const MAX_REPORTED: usize = 100;

/// All ordered pairs of labelled graphs on `v` vertices.
pub fn prop_down_exhaustive(v: usize, k: usize, t: usize) -> Result<PropDownReport> {
    check_table_k(k)?;
    if v > 5 {
        return Err(Error::Guard {
            what: "vertex count for exhaustive pair sweeps",
            value: v,
            max: 5,
        });
    }
    check_down(v, k, t)?;
    let ks: Vec<_> = k_subsets(v, k).collect();
    let ts: Vec<_> = k_subsets(v, t).collect();
    let total = 1u64 << pair_count(v);
    let sigs: Vec<(Vec<u32>, Vec<u32>)> = (0..total)
        .map(|m| {
            let g = Graph::from_mask(v, m).unwrap();
            (signature(&g, &ks), signature(&g, &ts))
        })
        .collect();
    let (premise, violations) = (0..total)
        .into_par_iter()
        .map(|a| {
            let mut premise = 0u64;
            let mut bad = Vec::new();
            for b in 0..total {
                let (ga, gb) = (&sigs[a as usize], &sigs[b as usize]);
                if ga.0 == gb.0 {
                    premise += 1;
                    if ga.1 != gb.1 && bad.len() < MAX_REPORTED {
                        bad.push((a, b));
                    }
                }
            }
            (premise, bad)
        })
        .reduce(
            || (0, Vec::new()),
            |(p1, mut v1), (p2, v2)| {
                v1.extend(v2);
                v1.sort_unstable();
                v1.truncate(MAX_REPORTED);
                (p1 + p2, v1)
            },
        );
    Ok(PropDownReport {
        v,
        k,
        t,
        sample: None,
        seed: None,
        pairs_checked: total * total,
        premise_holds: premise,
        violations,
    })
}

/// Seeded random pairs on `v` vertices (`v <= 11`).
pub fn prop_down_sampled(
    v: usize,
    k: usize,
    t: usize,
    sample: u64,
    seed: u64,
) -> Result<PropDownReport> {
    check_table_k(k)?;
    check_down(v, k, t)?;
    let ks: Vec<_> = k_subsets(v, k).collect();
    let ts: Vec<_> = k_subsets(v, t).collect();
    let stream = crate::harness::MaskStream::new(v, seed)?;
    let (premise, violations) = crate::harness::chunked(sample)
        .into_par_iter()
        .map(|(start, end)| {
            let mut premise = 0u64;
            let mut bad = Vec::new();
            for (a, b) in stream.pairs(start, end) {
                let g = Graph::from_mask(v, a).unwrap();
                let h = Graph::from_mask(v, b).unwrap();
                if signature(&g, &ks) == signature(&h, &ks) {
                    premise += 1;
                    if signature(&g, &ts) != signature(&h, &ts) && bad.len() < MAX_REPORTED {
                        bad.push((a, b));
                    }
                }
            }
            (premise, bad)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0, Vec::new()), |(p1, mut v1), (p2, v2)| {
            v1.extend(v2);
            v1.truncate(MAX_REPORTED);
            (p1 + p2, v1)
        });
    Ok(PropDownReport {
        v,
        k,
        t,
        sample: Some(sample),
        seed: Some(seed),
        pairs_checked: sample,
        premise_holds: premise,
        violations,
    })
}
