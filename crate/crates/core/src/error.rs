use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p̄ must be purely co-analytic, found analytic part `{0}`")]
    PbarHasAnalyticPart(String),
    #[error("p̄ must have co-analytic degree N >= 1")]
    PbarTooSmall,
    #[error("co-analytic power N must be at least 1")]
    PowerTooSmall,
    #[error("expected co-analytic coefficients c_0..c_N with N >= 1, got {0} coefficient(s)")]
    TooFewCoefficients(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
