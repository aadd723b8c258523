//! High-SNR distortion exponents: closed forms for every bound and scheme,
//! the optimal exponent where it is known, and estimation of exponents from
//! computed distortion curves.
//!
//! With Gamma fading of shapes `L_c` (channel) and `L_s` (side information)
//! the exponents are piecewise rational in the shapes. The formulas are
//! generic over the scalar type so they can be evaluated exactly with
//! `num_rational::Ratio`.

mod empirical;
mod formulas;
mod regime;

pub use empirical::{empirical_exponent, ExponentFit, DEFAULT_WINDOW};
pub use formulas::{exponent_exact, optimal_params_exact, ExactExponent, ExpScalar, OptimalParams};
pub use regime::{regime_map, Achiever, RegimeRow};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which exponent to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentKind {
    /// Partially informed encoder lower bound.
    Pe,
    /// Informed encoder lower bound.
    Inf,
    /// Upper bound on the optimal exponent.
    Upper,
    Uncoded,
    Sscc,
    Jds,
    /// S-HDA; HDA attains the same exponent.
    Shda,
    Optimal,
}

impl ExponentKind {
    pub const ALL: [ExponentKind; 8] = [
        Self::Pe,
        Self::Inf,
        Self::Upper,
        Self::Uncoded,
        Self::Sscc,
        Self::Jds,
        Self::Shda,
        Self::Optimal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Pe => "pe",
            Self::Inf => "inf",
            Self::Upper => "upper",
            Self::Uncoded => "uncoded",
            Self::Sscc => "sscc",
            Self::Jds => "jds",
            Self::Shda => "shda",
            Self::Optimal => "optimal",
        }
    }
}

impl fmt::Display for ExponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExponentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown exponent kind '{s}'")))
    }
}

/// Closed-form exponent with its regime and the optimal high-SNR parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentReport {
    pub kind: ExponentKind,
    /// For an uncharacterized optimal exponent this is the best scheme exponent,
    /// i.e. a lower bound.
    pub value: f64,
    pub regime: String,
    /// False only for `Optimal` outside the regions where it is known.
    pub characterized: bool,
    /// Upper bound, attached to `Optimal` reports.
    pub upper: Option<f64>,
    /// Schemes achieving the optimal exponent, for `Optimal` reports.
    pub achiever: Option<Achiever>,
    pub optimal_params: OptimalParams<f64>,
}

/// Evaluates the closed-form exponent `kind` at shapes `(ls, lc)`.
pub fn exponent_formula(kind: ExponentKind, ls: f64, lc: f64) -> Result<ExponentReport> {
    for (name, v) in [("L_s", ls), ("L_c", lc)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    let e = exponent_exact(kind, ls, lc);
    let (upper, achiever) = if kind == ExponentKind::Optimal {
        (
            Some(exponent_exact(ExponentKind::Upper, ls, lc).value),
            Some(Achiever::classify(ls, lc)),
        )
    } else {
        (None, None)
    };
    Ok(ExponentReport {
        kind,
        value: e.value,
        regime: e.regime.to_string(),
        characterized: e.characterized,
        upper,
        achiever,
        optimal_params: optimal_params_exact(ls, lc),
    })
}
