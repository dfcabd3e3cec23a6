use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("parameter mismatch: n = {left} vs n = {right}")]
    ParamMismatch { left: usize, right: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("endomorphism is not skew-symmetric")]
    NotSkew,

    #[error("direction e_{0} is vertical; a horizontal direction is required")]
    VerticalDirection(usize),

    #[error("spinor does not lie in the kernel of {0}")]
    NotInKernel(String),

    #[error("zero spinor")]
    ZeroSpinor,

    #[error("exterior space too large: {0}")]
    Oversized(String),

    #[error("malformed scalar literal {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
