//! Text formats: graph6, edge lists and graph literals.

mod edgelist;
mod graph6;
mod literal;

pub use edgelist::{emit_edgelist, parse_edgelist};
pub use graph6::{emit_graph6, parse_graph6};
pub use literal::parse_graph_literal;
