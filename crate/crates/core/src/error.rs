use thiserror::Error;

/// Errors produced by the algebra, integration and text-format routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("arity {arity} exceeds the supported maximum of {max}")]
    ArityTooLarge { arity: usize, max: usize },

    #[error("index {index} is out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("vertex has {found} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("expected a single-term form, found {terms} terms")]
    NotMonomial { terms: usize },

    #[error("support is only defined for degrees n-1 and n (degree {degree}, arity {arity})")]
    UnsupportedDegree { degree: usize, arity: usize },

    #[error("truth table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },

    #[error("exhaustive sweep is limited to arity <= 2 (requested {arity})")]
    ExhaustiveTooLarge { arity: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error at a byte offset of the input text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
