use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different quadratic fields: sqrt({left}) vs sqrt({right})")]
    RadicandMismatch { left: u64, right: u64 },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("radicand does not fit the supported range")]
    RadicandTooLarge,
    #[error("only real quadratic extensions are supported; {0} has no real square root")]
    NegativeRadicand(String),
    #[error("{0} is not a square in the ambient field")]
    NotSquare(String),
    #[error("exclusion list covers the whole sample space")]
    SampleSpaceExhausted,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular (no pivot at elimination stage {stage})")]
    Singular { stage: usize },
    #[error("R-matrix is not skew invertible")]
    NotSkewInvertible,
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("L is not an affine-BMW boundary for this representation: {0}")]
    NotBmwBoundary(String),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;
