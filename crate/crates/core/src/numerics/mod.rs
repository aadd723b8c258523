//! Numerical building blocks: special functions, adaptive quadrature, bracketing
//! root finding and a small box-constrained derivative-free minimizer.

mod optimize;
mod quad;
mod roots;
mod special;

pub use optimize::{minimize_box, minimize_box_with, Axis, AxisScale, BoxMin, SearchOptions};
pub use quad::{integrate_adaptive, integrate_singular_left, integrate_with_breaks, Integral};
pub use roots::find_root_bisect;
pub use special::{exp_integral_e1, gamma_inc_reg, gamma_inc_reg_upper, ln_gamma, scaled_e1};

use crate::error::{Error, Result};

/// Accuracy targets shared by every numerical routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative accuracy requested from quadrature.
    pub quad_rel: f64,
    /// Absolute floor below which quadrature error is accepted.
    pub quad_abs: f64,
    /// Final bracket width for root finding.
    pub root_tol: f64,
    /// Convergence width of the pattern-search optimizer.
    pub opt_tol: f64,
    /// Probability mass discarded in the upper tail of each fading law.
    pub tail_mass: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            quad_rel: 1e-10,
            quad_abs: 1e-200,
            root_tol: 1e-12,
            opt_tol: 1e-6,
            tail_mass: 1e-10,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("quad_rel", self.quad_rel),
            ("quad_abs", self.quad_abs),
            ("root_tol", self.root_tol),
            ("opt_tol", self.opt_tol),
            ("tail_mass", self.tail_mass),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerances(format!(
                    "{name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        if self.tail_mass >= 1e-6 {
            return Err(Error::InvalidTolerances(format!(
                "tail_mass must be below 1e-6, got {}",
                self.tail_mass
            )));
        }
        if self.quad_rel >= 1.0 {
            return Err(Error::InvalidTolerances(format!(
                "quad_rel must be below 1, got {}",
                self.quad_rel
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerances_are_valid() {
        Tolerances::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_tolerances() {
        let base = Tolerances::default();
        for bad in [
            Tolerances { quad_rel: 0.0, ..base },
            Tolerances { quad_abs: -1.0, ..base },
            Tolerances {
                root_tol: f64::NAN,
                ..base
            },
            Tolerances { opt_tol: 0.0, ..base },
            Tolerances {
                tail_mass: 1e-3,
                ..base
            },
        ] {
            assert!(matches!(bad.validate(), Err(Error::InvalidTolerances(_))));
        }
    }
}
