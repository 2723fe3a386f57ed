//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants fall into two families: [`Error::Parse`] for malformed textual
/// input, and contract violations for well-formed input that breaks a
/// precondition. [`Error::is_parse`] tells them apart, which the command-line
/// front end uses to choose an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("operands live in different rings: {0}")]
    SpecMismatch(String),

    #[error("exact division failed: a nonzero remainder survived")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("substitution requires integer exponents, found {0}")]
    FractionalExponent(String),

    #[error("term limit exceeded: intermediate result has {terms} terms (limit {limit})")]
    TermLimit { terms: usize, limit: usize },

    #[error("exponent arithmetic overflowed")]
    ExponentOverflow,

    #[error("partition of length {len} does not fit into {n} slots")]
    LengthExceeded { len: usize, n: usize },

    #[error("partition must have exactly {n} nonzero parts")]
    NotFullColumn { n: usize },

    #[error("{0} is not a vertical strip")]
    NotVerticalStrip(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid window [{lo}, {hi}]")]
    WindowInvalid { lo: i64, hi: i64 },

    #[error("index list is not strictly decreasing: {0:?}")]
    IndexNotDecreasing(Vec<i64>),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("enumeration too large: {count} items exceeds the ceiling {ceiling}")]
    EnumerationTooLarge { count: u64, ceiling: u64 },

    #[error("expanded product is not a q-polynomial")]
    NotQPolynomial,

    #[error("not a subspace: {0}")]
    NotSubspace(String),

    #[error("internal quotient lost dimension: expected {expected}, got {actual}")]
    DimensionDrop { expected: usize, actual: usize },

    #[error("the zero vector does not span a line")]
    ZeroVector,

    #[error("partition length {len} must be smaller than the dimension {dim}")]
    LengthTooLong { len: usize, dim: usize },

    #[error("expected a one-dimensional subspace, got dimension {0}")]
    NotALine(usize),

    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
}

impl Error {
    /// True for errors caused by unparseable text rather than a broken precondition.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidField(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
