use thiserror::Error;

/// Broad class of an error, used by front ends to pick exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Resource,
    Internal,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeSqrt,
    #[error("polynomial must have odd degree")]
    EvenDegree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("interval endpoint is a root")]
    EndpointIsRoot,
    #[error("input is not prime")]
    NotPrime,
    #[error("input is zero")]
    ZeroInput,
    #[error("input is a unit")]
    UnitInput,
    #[error("coefficients must be rational")]
    IrrationalCoefficients,
    #[error("polynomial must be univariate in {0}")]
    NotUnivariate(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("algebraic degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse { .. } | Error::Json(_) => ErrorKind::Parse,
            Error::DegreeBound { .. } => ErrorKind::Resource,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
