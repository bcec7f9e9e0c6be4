use std::fmt;

use thiserror::Error;

/// A syntax error in a braid word, with the byte offset where it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("matrix determinant is {0}, expected 1")]
    Determinant(String),

    #[error("invalid projective point {0}/{1}")]
    ProjPoint(String, String),

    #[error("invalid quadratic surd: {0}")]
    Surd(String),

    #[error("invalid continued fraction: {0}")]
    ContinuedFraction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Raised when an internal consistency check fails. Seeing this means
    /// there is a bug in the library, not in the input.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
