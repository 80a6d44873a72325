use thiserror::Error;

#[derive(Debug, Error)]
pub enum SbError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter {name}: {msg}")]
    InvalidParam { name: &'static str, msg: String },

    #[error("non-finite state (NaN or overflow) at SB step {step}")]
    NumericFailure { step: u32 },

    #[error(transparent)]
    Ising(#[from] ising_core::IsingError),
}
