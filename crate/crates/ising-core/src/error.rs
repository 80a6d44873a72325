use thiserror::Error;

#[derive(Debug, Error)]
pub enum IsingError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("instance needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),

    #[error("exhaustive search is limited to n <= {max}, got n = {got}")]
    TooLarge { max: usize, got: usize },

    #[error("coupling entry at ({i}, {j}) is {value}; must be -1, 0 or +1")]
    InvalidEntry { i: usize, j: usize, value: i64 },

    #[error("coupling matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("coupling matrix has nonzero diagonal at {0}")]
    NonzeroDiagonal(usize),

    #[error("spin at index {index} is {value}; must be +1 or -1")]
    InvalidSpin { index: usize, value: i64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
