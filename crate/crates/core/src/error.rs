use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial division is not exact over the integers")]
    NotDivisible,
    #[error("interpolating polynomial has non-integer coefficients")]
    NonIntegerCoefficients,
    #[error("truncated series have different truncation degrees ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("cover relations contain a cycle through {0:?}")]
    CycleDetected(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("linear extensions belong to different posets")]
    MismatchedPoset,
    #[error("tableaux have different shapes")]
    ShapeMismatch,
    #[error("skew shapes are not supported by this operation")]
    SkewNotSupported,
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("no certified Z[q] eigenvalues found: {0}")]
    EigenExtractionFailed(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    /// Errors caused by malformed or inconsistent user input, as opposed to
    /// failed computations.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::NotDivisible
                | Error::NonIntegerCoefficients
                | Error::TruncationMismatch(..)
                | Error::InternalInvariantViolation(_)
                | Error::EigenExtractionFailed(_)
        )
    }
}
