use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{low_bits, pair_count, Graph, MAX_MASK_VERTICES};

/// Largest `n` accepted by [`enumerate_labeled`] (`2^36` graphs).
pub const MAX_ENUM_VERTICES: usize = 9;

/// Work unit for parallel sweeps. Fixed so that results never depend on the
/// worker count.
pub const CHUNK: u64 = 1 << 13;

/// All labelled graphs on `n` vertices in increasing edge-mask order,
/// optionally restricted to a mask range.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Guard {
            what: "vertex count for enumeration",
            value: n,
            max: MAX_ENUM_VERTICES,
        });
    }
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1 << pair_count(n),
    })
}

impl LabeledGraphs {
    pub fn total(&self) -> u64 {
        1 << pair_count(self.n)
    }

    /// The sub-stream of masks in `start..end` (clamped to the full range).
    pub fn range(&self, start: u64, end: u64) -> Self {
        let total = self.total();
        Self {
            n: self.n,
            next: start.min(total),
            end: end.min(total),
        }
    }

    /// Splits the remaining masks into `parts` contiguous ranges.
    pub fn split(&self, parts: usize) -> Vec<Self> {
        let parts = parts.max(1) as u64;
        let len = self.end.saturating_sub(self.next);
        (0..parts)
            .map(|i| {
                let a = self.next + len * i / parts;
                let b = self.next + len * (i + 1) / parts;
                self.range(a, b)
            })
            .collect()
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_mask(self.n, self.next).unwrap();
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// `(start, end)` ranges of [`CHUNK`] indices covering `0..total`.
pub fn chunked(total: u64) -> Vec<(u64, u64)> {
    (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect()
}

/// Seeded, counter-addressed stream of random edge masks.
///
/// Sample `i` is drawn from ChaCha8 words `4i..4i+4`, so any index range can
/// be regenerated independently of how the range was split among workers.
#[derive(Debug, Clone, Copy)]
pub struct MaskStream {
    n: usize,
    seed: u64,
}

impl MaskStream {
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        if n > MAX_MASK_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_MASK_VERTICES,
            });
        }
        Ok(Self { n, seed })
    }

    /// Mask pairs for sample indices `start..end`.
    pub fn pairs(&self, start: u64, end: u64) -> impl Iterator<Item = (u64, u64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_word_pos(start as u128 * 4);
        let keep = low_bits(pair_count(self.n));
        (start..end).map(move |_| (rng.next_u64() & keep, rng.next_u64() & keep))
    }

    pub fn pair(&self, i: u64) -> (u64, u64) {
        self.pairs(i, i + 1).next().unwrap()
    }

    /// Single masks for sample indices `start..end`.
    pub fn masks(&self, start: u64, end: u64) -> impl Iterator<Item = u64> {
        self.pairs(start, end).map(|(a, _)| a)
    }
}
