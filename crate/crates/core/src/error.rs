use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),

    #[error("quadrature did not converge on [{a:e}, {b:e}]: estimate {estimate:e} with error {error:e}")]
    Quadrature { a: f64, b: f64, estimate: f64, error: f64 },

    #[error("no sign change on [{lo:e}, {hi:e}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("target-state solve failed: {0}")]
    TargetState(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("not implemented: {0}")]
    NotImplemented(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
