use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed structural input (non-bijective permutation, bad table shape).
    #[error("format error: {0}")]
    Format(String),
    /// Input that parses but violates an axiom (action law, functoriality, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("capacity exceeded: group of order {order} is above the brute-force bound {bound}")]
    Capacity { order: usize, bound: usize },
    #[error("composition error: {0}")]
    Composition(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A result contradicts a proven identity; always a bug in this crate.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
