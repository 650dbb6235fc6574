use thiserror::Error;

use crate::grading::Degree;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed degree: {0}")]
    MalformedDegree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("degree {0} lies outside the valid region")]
    OutsideValidRegion(Degree),

    #[error("degree {0} lies outside the declared support")]
    OutsideSupport(Degree),

    #[error("series is not connected: constant coefficient is {0}, expected 1")]
    NotConnected(String),

    #[error("comparison window exceeds a valid region at ceiling {0}")]
    WindowExceedsValidRegion(Degree),

    #[error("class is not effective: coefficient {coeff} at {degree}")]
    NegativeCoefficient { degree: Degree, coeff: String },

    #[error("no Koszul resolution available for the left argument: {0}")]
    UnsupportedLeftArgument(String),

    #[error("not a chain complex: d_{index} d_{next} != 0 at degree {degree}", next = .index + 1)]
    ChainLawViolated { index: usize, degree: Degree },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    /// Coarse classification used for process exit codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::MalformedDegree(_) | Error::Parse(_) => ErrorKind::Parse,
            Error::InvalidRing(_) | Error::InvalidModule(_) => ErrorKind::Validation,
            Error::OutsideValidRegion(_) | Error::WindowExceedsValidRegion(_) => ErrorKind::Window,
            _ => ErrorKind::Computation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Validation,
    Window,
    Computation,
}

impl ErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Parse => "parse",
            ErrorKind::Validation => "validation",
            ErrorKind::Window => "window",
            ErrorKind::Computation => "computation",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Computation => 1,
            ErrorKind::Parse => 2,
            ErrorKind::Validation => 3,
            ErrorKind::Window => 4,
        }
    }
}
