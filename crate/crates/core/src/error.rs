use thiserror::Error;

use crate::scalar::ScalarDomain;

/// Errors raised by the algebra layer.
///
/// Most of these are contract violations or consistency traps rather than
/// recoverable conditions; they are surfaced as values so that verification
/// suites can record them as failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range for {context}")]
    IndexOutOfRange { index: usize, context: String },

    #[error("invalid rank {rank} for type {ty}")]
    InvalidRank { ty: char, rank: usize },

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("division not exact: {0}")]
    DivisionNotExact(String),

    #[error("domain cannot divide: {value} / {divisor} is not in {domain}")]
    DomainCannotDivide {
        value: String,
        divisor: String,
        domain: ScalarDomain,
    },

    #[error("residual nonzero: {0}")]
    ResidualNonzero(String),

    #[error("not expressible in elementary generators: {0}")]
    NotExpressible(String),

    #[error("not in the symmetric ring: {0}")]
    NotInLambda(String),

    #[error("element not in the Weyl group: {0}")]
    NotInGroup(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
