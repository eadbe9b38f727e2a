use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The reduced denominator vanishes at the evaluation point, so the
    /// singularity is genuine rather than removable.
    #[error("singular limit at t = {at}: reduced denominator vanishes")]
    SingularLimit { at: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} = {got} exceeds the supported limit {max}")]
    LimitExceeded { what: String, got: u32, max: u32 },

    #[error("unknown suite name: {0}")]
    UnknownSuite(String),

    #[error("series constant term is not invertible")]
    NonInvertibleSeries,

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
