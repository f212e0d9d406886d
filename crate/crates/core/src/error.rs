//! Crate-wide error type.

use std::fmt;

/// Errors raised by ring construction and symbolic operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different ambient rings.
    AmbientMismatch,
    /// A variable name is not declared in the ambient ring.
    UndeclaredVariable(String),
    /// Substitution hit a variable that is neither bound nor present in the target ring.
    UnboundVariable(String),
    /// An index does not address a valid coordinate / fixed point.
    IndexOutOfRange { index: usize, limit: usize },
    /// elementary symmetric index outside `0..=n`.
    SymmetricIndexOutOfRange { index: usize, vars: usize },
    /// The polynomial is not symmetric in the given variables.
    NotSymmetric,
    /// The polynomial uses a variable outside the allowed set.
    VariableOutsideSet(String),
    /// A relation is not homogeneous for the grading.
    InhomogeneousRelation(String),
    /// The relation list does not satisfy the constraints of the reduction strategy.
    StrategyMismatch(String),
    /// Fixed-point operations require pairwise distinct weights.
    RepeatedWeights,
    /// Character lattice ranks disagree.
    LatticeMismatch,
    /// A localization sum failed to clear its denominators.
    NonClearingDenominator(String),
    /// A semi-invariant weight must be positive under this crate's sign convention.
    NonPositiveWeight(i64),
    /// A scenario file is structurally valid but semantically inconsistent.
    InvalidScenario(String),
    /// A named verification check failed.
    VerificationFailed(String),
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AmbientMismatch => write!(f, "operands live in different ambient rings"),
            Error::UndeclaredVariable(name) => write!(f, "variable `{name}` is not declared"),
            Error::UnboundVariable(name) => {
                write!(f, "variable `{name}` is neither bound nor present in the target ring")
            }
            Error::IndexOutOfRange { index, limit } => {
                write!(f, "index {index} out of range ({limit} entries)")
            }
            Error::SymmetricIndexOutOfRange { index, vars } => {
                write!(f, "elementary symmetric index {index} out of range for {vars} variables")
            }
            Error::NotSymmetric => write!(f, "polynomial is not symmetric"),
            Error::VariableOutsideSet(name) => {
                write!(f, "variable `{name}` is outside the allowed variable set")
            }
            Error::InhomogeneousRelation(rel) => {
                write!(f, "relation `{rel}` is not homogeneous for the grading")
            }
            Error::StrategyMismatch(msg) => write!(f, "strategy/relations mismatch: {msg}"),
            Error::RepeatedWeights => write!(f, "weights must be pairwise distinct"),
            Error::LatticeMismatch => write!(f, "character lattice ranks disagree"),
            Error::NonClearingDenominator(msg) => {
                write!(f, "localization sum did not clear its denominators: {msg}")
            }
            Error::NonPositiveWeight(w) => {
                write!(f, "weight {w} is not positive under the sign convention")
            }
            Error::InvalidScenario(msg) => write!(f, "invalid scenario: {msg}"),
            Error::VerificationFailed(name) => write!(f, "verification failed: {name}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
