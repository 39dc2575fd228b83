use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings, fields or algebras.
    #[error("structural mismatch: {0}")]
    Structural(String),
    #[error("the zero polynomial has no order")]
    UndefinedOrder,
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("resource ceiling exceeded: {0}")]
    LimitExceeded(String),
    #[error("ideal is not cofinite: {0}")]
    NotCofinite(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid fiber product: {0}")]
    InvalidFiber(String),
    /// A predicate needs flags the profile does not carry.
    #[error("incomplete profile, missing: {}", .0.join(", "))]
    IncompleteProfile(Vec<String>),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    /// Two routes that must agree did not.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
