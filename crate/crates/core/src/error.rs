use thiserror::Error;

/// Errors raised by graph construction and the numeric/exact engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("induced subgraph is disconnected")]
    DisconnectedSubgraph,
    #[error("quadratic embedding constant is undefined for a single vertex")]
    OrderOne,
    #[error("invalid family parameters: {0}")]
    BadParams(String),
    #[error("root vertex {0} out of range")]
    BadRoot(usize),
    #[error("vertex set must be non-empty")]
    EmptySet,
    #[error("graph is not of QE class")]
    NotQE,
    #[error("graph is not regular")]
    NotRegular,
    #[error("no closed form for family {0}")]
    UnsupportedFamily(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
