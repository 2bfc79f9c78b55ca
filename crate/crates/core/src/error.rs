use thiserror::Error;

/// Errors raised by the algebra kernel and the analysis pipeline.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("modulus {0} is not an admissible prime")]
    BadModulus(u64),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("operands live in rings with different variable counts")]
    RingMismatch,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("adding forms of degrees {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("matrix is singular")]
    Singular,
    #[error("all-zero point")]
    ZeroPoint,
    #[error("constraint system has no nonzero solution")]
    EmptySolutionSpace,
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
