//! Fixed inputs for the benchmarks.

use clawfree_core::harness::MaskStream;
use clawfree_core::{named, Graph, Name};

/// The catalog graphs plus a few cycles and paths.
pub fn catalog_inputs() -> Vec<(String, Graph)> {
    let mut names = Name::FIXED.to_vec();
    names.extend([Name::Cycle(9), Name::Cycle(12), Name::Path(10)]);
    names
        .into_iter()
        .map(|name| (name.to_string(), named(name).unwrap()))
        .collect()
}

/// `count` seeded random graphs on `n` vertices.
pub fn random_graphs(n: usize, count: u64, seed: u64) -> Vec<Graph> {
    MaskStream::new(n, seed)
        .unwrap()
        .masks(0, count)
        .map(|m| Graph::from_mask(n, m).unwrap())
        .collect()
}
