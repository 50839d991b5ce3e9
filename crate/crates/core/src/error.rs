use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown semiedge {0}")]
    UnknownSemiedge(usize),
    #[error("cannot join semiedge {0} to itself")]
    SameSemiedge(usize),
    #[error("unknown connector `{0}`")]
    UnknownConnector(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("connector arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("vertex {vertex} has {degree} edge ends, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("connectors do not partition the semiedges: {0}")]
    ConnectorPartition(String),
    #[error("multipole contains a free loop")]
    FreeLoop,
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph is 3-edge-colourable")]
    NotSnark,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification mismatch: {0}")]
    Verification(String),
    #[error("colouring counter overflow")]
    Overflow,
}
