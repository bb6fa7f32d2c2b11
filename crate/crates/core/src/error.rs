use thiserror::Error;

use crate::verify::{CheckVerdict, Level};

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Verification failures are not errors: they are reported as a
/// [`CheckVerdict`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type ({n};{m}): need 1 <= m <= n")]
    InvalidType { n: usize, m: usize },

    #[error("{what} has length {actual}, expected {expected}")]
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{what} value {value} is outside 0..={n}")]
    ValueOutOfRange {
        what: &'static str,
        value: usize,
        n: usize,
    },

    #[error("element {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("unit {unit} is outside 1..={m}")]
    UnitOutOfRange { unit: usize, m: usize },

    #[error("operation requires level {required:?}, input reached {}", .verdict.level)]
    Precondition {
        required: Level,
        verdict: CheckVerdict,
    },

    #[error("not a group: {0}")]
    GroupAxiom(#[from] GroupAxiom),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("enumeration of type ({n};{m}) is not supported: {reason}")]
    Unsupported {
        n: usize,
        m: usize,
        reason: &'static str,
    },
}

/// The group axiom a [`crate::GroupTable`] violates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupAxiom {
    #[error("empty element list")]
    Empty,
    #[error("element list has duplicate {0}")]
    DuplicateElement(usize),
    #[error("table has {actual} entries, expected {expected}")]
    TableShape { expected: usize, actual: usize },
    #[error("unit {0} is not in the element list")]
    UnitNotMember(usize),
    #[error("product of {0} and {1} is not an element (closure)")]
    Closure(usize, usize),
    #[error("{0} is not a two-sided identity")]
    Identity(usize),
    #[error("{0} has no two-sided inverse")]
    Inverse(usize),
    #[error("({0} {1}) {2} differs from {0} ({1} {2}) (associativity)")]
    Associativity(usize, usize, usize),
}

/// A structure-file parse failure, located by 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
