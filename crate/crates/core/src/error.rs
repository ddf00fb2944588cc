use thiserror::Error;

/// Errors shared by all modules. Size caps are hard errors, never silent
/// truncation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("point count {0} out of range 1..={max}", max = crate::frame::MAX_POINTS)]
    PointCount(usize),

    #[error("atom count {0} out of range 1..={max}", max = crate::algebra::MAX_ATOMS)]
    AtomCount(usize),

    #[error("index {index} out of range for size {bound}")]
    Index { index: usize, bound: usize },

    #[error("triples may only be supplied for kind `from_triples`")]
    TriplesNotAllowed,

    #[error("kind `from_triples` requires an explicit triple list")]
    TriplesRequired,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
