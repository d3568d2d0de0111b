use thiserror::Error;

/// Errors raised by the algebraic and topological routines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("zero polynomial not allowed: {0}")]
    ZeroPolynomial(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    #[error("angle {0} is a jump point of the signature function; use the signature profile instead")]
    JumpPoint(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
