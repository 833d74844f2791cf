use thiserror::Error;

/// Errors raised by graph construction, transforms and index computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("Mycielskian needs n >= 2 and m >= 1, got n = {n}, m = {m}")]
    TooSmall { n: usize, m: usize },
    #[error("diameter must be exactly 2, got {0}")]
    DiameterNotTwo(u32),
    #[error("distance matrix has dimension {found}, expected {expected}")]
    MatrixMismatch { expected: usize, found: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
