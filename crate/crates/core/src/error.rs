use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("matrix is not nilpotent within its size bound")]
    NotNilpotent,

    #[error("element is not in the expected algebra: {0}")]
    NotInAlgebra(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("weak-order rule gap: {0}")]
    RuleGap(String),

    #[error("degenerate cone: {0}")]
    DegenerateCone(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no matching induction case: {0}")]
    NoInductionCase(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
