use thiserror::Error;

/// The density-matrix condition that a candidate state failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateCondition {
    Hermiticity,
    UnitTrace,
    Positivity,
}

impl std::fmt::Display for StateCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            StateCondition::Hermiticity => "hermiticity",
            StateCondition::UnitTrace => "unit trace",
            StateCondition::Positivity => "positive semi-definiteness",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions: {0}")]
    InvalidDims(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// `magnitude` is the size of the violation: the Hermiticity defect, `|tr - 1|`,
    /// or the most negative eigenvalue.
    #[error("invalid state: {condition} violated (magnitude {magnitude:e})")]
    InvalidState { condition: StateCondition, magnitude: f64 },

    #[error("channel is not trace preserving: max |sum K^dag K - I| = {0:e}")]
    CompletenessViolation(f64),

    #[error("state is still entangled at t_max = {t_max}; retry with a larger t_max")]
    BracketFailure { t_max: f64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
