use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("arity: {0}")]
    Arity(String),
    #[error("exponent overflow: {0}")]
    Overflow(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero polynomial: {0}")]
    ZeroPolynomial(String),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("unit ideal: {0}")]
    UnitIdeal(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("quotient is not of finite length")]
    NotFiniteLength,
    #[error("no general section found; tried seeds {seeds:?}")]
    GenericityFailure { seeds: Vec<u64> },
    #[error("family construction failed: {0}")]
    Construction(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
