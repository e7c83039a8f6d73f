use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in rings with different variable counts.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Operands live over different fields.
    FieldMismatch,
    /// Ideals truncated at different degrees where equal ones are required.
    TruncationMismatch {
        left: usize,
        right: usize,
    },
    ZeroPolynomial,
    ZeroOperator,
    UnitOperator,
    NotAnAutomorphism,
    /// A truncation degree is too small for the requested result to be exact.
    InsufficientPrecision {
        needed: usize,
        available: usize,
    },
    /// A generated ideal could not be certified to contain a power of the maximal ideal.
    NotCertified {
        trunc: usize,
    },
    InvalidField(String),
    InvalidArgument(String),
    Precondition(String),
    NotGraded,
    NotHomogeneous,
    UnsupportedDegree {
        degree: usize,
        minimum: usize,
    },
    NotStandardForm {
        r: usize,
        i: usize,
    },
    HypothesisNotMet(String),
    NotZeroDimensional,
    RootsUnavailable(String),
    Budget {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "variable count mismatch: expected {expected}, found {found}")
            }
            Error::FieldMismatch => f.write_str("operands are defined over different fields"),
            Error::TruncationMismatch { left, right } => {
                write!(f, "truncation degrees differ ({left} vs {right})")
            }
            Error::ZeroPolynomial => f.write_str("zero polynomial has no apolar algebra"),
            Error::ZeroOperator => f.write_str("operator must be nonzero"),
            Error::UnitOperator => f.write_str("operator must lie in the maximal ideal"),
            Error::NotAnAutomorphism => f.write_str("substitution is not an automorphism"),
            Error::InsufficientPrecision { needed, available } => {
                write!(f, "truncation degree {available} is too small, at least {needed} is required")
            }
            Error::NotCertified { trunc } => {
                write!(f, "generated ideal does not contain a power of the maximal ideal below degree {trunc}")
            }
            Error::InvalidField(msg) => write!(f, "invalid field: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::NotGraded => f.write_str("ideal is not homogeneous"),
            Error::NotHomogeneous => f.write_str("polynomial is not homogeneous"),
            Error::UnsupportedDegree { degree, minimum } => {
                write!(f, "degree {degree} is unsupported, need at least {minimum}")
            }
            Error::NotStandardForm { r, i } => {
                write!(f, "polynomial is not in standard form (violation at r={r}, i={i}); apply a twist first")
            }
            Error::HypothesisNotMet(msg) => write!(f, "hypothesis not met: {msg}"),
            Error::NotZeroDimensional => f.write_str("ideal is not zero-dimensional"),
            Error::RootsUnavailable(msg) => write!(f, "roots not in base field: {msg}"),
            Error::Budget { what, limit, requested } => {
                write!(f, "budget exceeded for {what}: limit {limit}, requested {requested}")
            }
        }
    }
}

impl core::error::Error for Error {}
