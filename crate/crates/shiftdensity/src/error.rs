//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid shift specification: {0}")]
    InvalidShift(String),

    #[error("substitution is not primitive")]
    NotPrimitive,

    #[error("word {0:?} is not in the language of the shift")]
    NotInLanguage(String),

    #[error("shift of finite type is reducible: {0}")]
    ReducibleSft(String),

    #[error("invalid measure specification: {0}")]
    InvalidMeasure(String),

    #[error("eigenvector iteration did not converge within {steps} steps (residual {residual:e})")]
    NoConvergence { steps: usize, residual: f64 },

    #[error("operation needs a {expected} shift, got {got}")]
    WrongShiftKind { expected: &'static str, got: &'static str },

    #[error("window cap exceeded while {context} (cap {cap})")]
    WindowExhausted { context: String, cap: usize },

    #[error("semi-decision procedure gave up: {0}")]
    SemiDecision(String),

    #[error("unknown letter {0:?}")]
    UnknownLetter(String),

    #[error("index range [{lo}, {hi}) unavailable from the point handle")]
    IndexUnavailable { lo: i64, hi: i64 },

    #[error("horizon {0} exceeds the exact-slice work cap for this backend")]
    HorizonTooLarge(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("schema error at {pointer}: {message}")]
    Schema { pointer: String, message: String },

    #[error("semantic error: {0}")]
    Semantic(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { pointer: pointer.into(), message: message.into() }
    }
}
