use thiserror::Error;

/// Errors raised by the evaluators and predicates in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Inputs violate the hypotheses of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested point is a pole of the function.
    #[error("pole at s = {0}")]
    Pole(String),
    /// A point lies within the geometric tolerance of a region boundary.
    #[error("boundary error: {0}")]
    Boundary(String),
    /// Shift-reduction into the fundamental region failed.
    #[error("reduction error: {0}")]
    Reduction(String),
    /// A series could not be summed to the requested tolerance.
    #[error("convergence error: {0}")]
    Convergence(String),
    /// A requested order exceeds the supported range.
    #[error("range error: {0}")]
    Range(String),
    /// An index argument is out of range.
    #[error("index error: {0}")]
    Index(String),
    /// An infinite product contains a vanishing factor.
    #[error("zero factor: {0}")]
    ZeroFactor(String),
    /// A command-line value could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag used in structured CLI output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::Pole(_) => "PoleError",
            Error::Boundary(_) => "BoundaryError",
            Error::Reduction(_) => "ReductionError",
            Error::Convergence(_) => "ConvergenceError",
            Error::Range(_) => "RangeError",
            Error::Index(_) => "IndexError",
            Error::ZeroFactor(_) => "ZeroFactorError",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
