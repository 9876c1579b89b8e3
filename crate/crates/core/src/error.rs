use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    /// A contract on the inputs was broken (bad sum, wrong shape, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A search or size cap was hit; says nothing about existence.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("pole pattern at infinity matches no known type: {0}")]
    UnknownPattern(String),
    #[error("audit failure: {0}")]
    Audit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
