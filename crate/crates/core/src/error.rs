//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("antisymmetry violated at basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails on basis triples {0:?}")]
    JacobiFailure(Vec<(usize, usize, usize)>),
    #[error("map for basis element {0} is not a derivation")]
    NotDerivation(usize),
    #[error("action matrices do not satisfy the bracket relations")]
    NotRepresentation,
    #[error("operation requires a semisimple algebra (Killing form is degenerate)")]
    NotSemisimple,
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("malformed input file: {0}")]
    Json(#[from] serde_json::Error),
}

/// Signals that a budgeted computation ran out of reduction steps.
///
/// This is deliberately distinct from [`Error`]: exhausting the budget is an
/// honest "inconclusive" outcome, never a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

impl std::fmt::Display for BudgetExhausted {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "step budget exhausted")
    }
}

impl std::error::Error for BudgetExhausted {}
