//! Graphs with no induced claw and no induced co-claw: recognition with
//! certificates, the edge-graph `S(U)` and Boolean-sum decompositions,
//! reconstruction up to complementation, and an exhaustive verification
//! harness.
//!
//! Graphs are dense (one `u64` neighbour mask per vertex, `n <= 62`). Edges
//! are indexed by the lexicographic order of pairs `i < j`; that index is the
//! vertex numbering of `S(U)`.

pub mod catalog;
pub mod detect;
pub mod edge_graph;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod recon;
pub mod schema;
pub mod theorem;

pub use catalog::{named, Name, NamedGraph};
pub use detect::{
    component_shapes, find_claw, find_cotriangle, find_triangle, h3, is_claw_free,
    is_forb_bruteforce, ClawWitness, ComponentShape, Shape, TripleHypergraph,
};
pub use edge_graph::{bipartition, edge_graph, parity_coloring, EdgeGraph, OddCycle, TwoColoring};
pub use error::{Error, Result};
pub use graph::{make_graph, Graph, VertexSubset, MAX_VERTICES};
pub use harness::{enumerate_labeled, verify, Property, VerificationReport, VerifyRequest};
pub use io::{emit_graph6, parse_edgelist, parse_graph6, parse_graph_literal};
pub use iso::{canonical_code, find_induced_embedding, is_isomorphic, CanonicalCode};
pub use recon::{hypomorphic_utc, iso_utc, reconstructible_utc, Reconstruction};
pub use theorem::{
    all_decompositions, classify, condition3, decompose, lemma_ggu_check, Condition3,
    Decomposition, ForbCertificate, MemberCase, Obstruction,
};
