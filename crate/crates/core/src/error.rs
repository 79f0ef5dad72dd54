use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Tables of the wrong shape, out-of-range indices, bad labels.
    #[error("malformed ring tables: {0}")]
    Structural(String),

    #[error("ring axioms violated: {0}")]
    Axioms(String),

    #[error("element set is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("size cap exceeded: {what} would have {size} elements (cap {cap})")]
    SizeCap { what: String, size: u128, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator `{name}` at position {pos}")]
    UnknownGenerator { name: String, pos: usize },

    #[error("possibly infinite ring: quotient did not stabilize by degree {max_degree}")]
    PossiblyInfinite { max_degree: usize },

    #[error("order mismatch: expected {expected}, built {actual}")]
    OrderMismatch { expected: usize, actual: usize },

    #[error("RINGTAB format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
