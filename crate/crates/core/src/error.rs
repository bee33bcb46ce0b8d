//! Error type shared by all modules of the crate.

use std::fmt;

/// Errors produced by exact-arithmetic operations and sequence evaluators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division (or inversion) of an exact zero.
    DivisionByZero,
    /// The scalar part of a Binet difference did not vanish. This can only
    /// happen through an implementation bug, never through bad input.
    BinetInconsistency(String),
    /// A denominator that the construction assumed nonzero vanished at the
    /// requested parameter value.
    DegenerateDenominator(String),
    /// A parameter is outside the domain of the operation.
    InvalidParameter(String),
    /// A symbolic computation was requested beyond its configured bound.
    SymbolicBoundExceeded { requested: u32, bound: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::BinetInconsistency(msg) => write!(f, "Binet inconsistency: {}", msg),
            Error::DegenerateDenominator(msg) => write!(f, "degenerate denominator: {}", msg),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {}", msg),
            Error::SymbolicBoundExceeded { requested, bound } => write!(
                f,
                "symbolic bound exceeded: requested {}, configured bound {}",
                requested, bound
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
