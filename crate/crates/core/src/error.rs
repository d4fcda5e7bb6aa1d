use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("invalid structure: {0}")]
    Invalid(String),

    #[error("map is not balanced: {0}")]
    NotBalanced(String),

    #[error("radical unsupported in characteristic {characteristic} for dimension {dim}")]
    UnsupportedCharacteristic { characteristic: u64, dim: usize },

    #[error("reducible polynomial: factor {0}")]
    Reducible(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
