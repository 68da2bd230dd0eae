use alloc::string::String;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// The denominator of a scalar vanishes at the chosen point; draw another.
    #[error("denominator vanishes at the specialization point")]
    Pole,
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation is only defined at the classical point q = 1")]
    RequiresClassical,
    #[error("f_{0} with odd index is only available at q = 1")]
    OddCliffordProduct(usize),
    #[error("incompatible parity between weight and tensor power")]
    ParityMismatch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = core::result::Result<T, Error>;
