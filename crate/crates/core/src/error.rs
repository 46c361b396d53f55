use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid size {0}: need at least 2 nodes")]
    InvalidSize(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },
    #[error("Lyapunov system is singular (disconnected graph or shared eigenvalues)")]
    SingularSystem,
    #[error("Lyapunov residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualTooLarge { residual: f64, tol: f64 },
    #[error("graph is not connected (no globally reachable node)")]
    NotConnected,
    #[error("node index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("edge weight must be positive and finite, got {0}")]
    NonpositiveWeight(f64),
    #[error("path has no edges")]
    EmptyPath,
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("recurrence table is missing r({0}, {1})")]
    MissingPrior(u32, u32),
    #[error("parameters {params:?} outside validity range of {id}")]
    OutOfValidityRange { id: String, params: Vec<i64> },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
