use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex counts differ ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid catalog parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6: byte {byte} at position {position} is outside 63..=126")]
    Graph6Byte { position: usize, byte: u8 },
    #[error("graph6: expected {expected} payload bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("coloring is not proper on edge {{{0}, {1}}}")]
    ImproperColoring(usize, usize),
    #[error("coloring covers {found} vertices, expected {expected}")]
    ColoringSize { expected: usize, found: usize },
    #[error("edge-graph is not bipartite")]
    NotBipartite,
    #[error("{what}: {value} exceeds the limit of {max}")]
    Guard {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("{0}")]
    Precondition(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}
