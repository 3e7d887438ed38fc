//! Executable forms of the two structural results: membership
//! classification with certificates, and Boolean sum decomposition.

mod classify;
mod decompose;

pub use classify::{classify, condition3, Condition3, ForbCertificate, MemberCase, Side, Witness};
pub use decompose::{
    all_decompositions, decompose, lemma_ggu_check, same_h3, Decomposition, EdgeGraphSide, Flips,
    LemmaGgu, Obstruction, MAX_FLIP_COMPONENTS,
};
