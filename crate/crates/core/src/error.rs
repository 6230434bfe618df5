use thiserror::Error;

/// Errors produced by poset ingestion and the polytope computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("unknown element index {0}")]
    UnknownElement(usize),
    #[error("order relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("size guard: {what} ({size} exceeds limit {limit}); raise EPOLY_SIZE_LIMIT to override")]
    SizeGuard { what: &'static str, size: u128, limit: u128 },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("negative input not allowed: {0}")]
    NegativeInput(String),
    #[error("not a left enriched P-partition: {0}")]
    NotLeftEnriched(String),
    #[error("invalid polynomial: {0}")]
    Polynomial(String),
    #[error("verification mismatch: {0}")]
    Verification(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
