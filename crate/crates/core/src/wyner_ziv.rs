//! Single-layer Wyner-Ziv coding when the decoder's side information has a
//! fading gain: expected distortion for a given target state, the optimality
//! condition that picks the target, and the Rayleigh closed form.
//!
//! A source code of rate `R` designed for side-information gain `gamma_bar`
//! is decoded whenever the realized gain is at least `gamma_bar`. Writing
//! `K = 2^(2R)`, the expected distortion is
//!
//! ```text
//! ED(gamma_bar) = E[1/(1+G); G < gamma_bar] + E[1/(A+G); G >= gamma_bar],
//! A = (1 + gamma_bar) K - gamma_bar.
//! ```
//!
//! Its derivative in `gamma_bar` is `-(K-1)` times the target residual, so the
//! optimal target is the root of the residual on the rising edge of the density.

use crate::error::{Error, Result};
use crate::fading::GainMeasure;
use crate::numerics::{find_root_bisect, scaled_e1};

/// Optimal design point of the single-layer source code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetState {
    pub gamma_bar: f64,
    /// Density level `p(gamma_bar)` of the matching super-level set.
    pub alpha_star: f64,
    /// Set when the optimum sits at `gamma_bar = 0`.
    pub at_boundary: bool,
}

fn rate_factor(rate: f64) -> Result<f64> {
    if !(rate >= 0.0 && rate.is_finite()) {
        return Err(Error::Domain(format!(
            "rate must be finite and nonnegative, got {rate}"
        )));
    }
    Ok((2.0 * rate).exp2())
}

fn check_target(gamma_bar: f64) -> Result<()> {
    if !(gamma_bar >= 0.0 && gamma_bar.is_finite()) {
        return Err(Error::Domain(format!(
            "target gain must be nonnegative, got {gamma_bar}"
        )));
    }
    Ok(())
}

/// Expected distortion of a rate-`rate` code targeting `gamma_bar`.
pub fn ed_q_given_target(side: &GainMeasure, rate: f64, gamma_bar: f64) -> Result<f64> {
    check_target(gamma_bar)?;
    ed_given_target_k(side, rate_factor(rate)?, gamma_bar)
}

/// Target-state residual; positive means the expected distortion still falls
/// as `gamma_bar` grows.
pub fn target_residual(side: &GainMeasure, rate: f64, gamma_bar: f64) -> Result<f64> {
    check_target(gamma_bar)?;
    residual_k(side, rate_factor(rate)?, gamma_bar)
}

/// Optimal target state for rate `rate`.
pub fn solve_target(side: &GainMeasure, rate: f64) -> Result<TargetState> {
    solve_target_k(side, rate_factor(rate)?)
}

/// Minimum expected distortion of single-layer coding at rate `rate`.
pub fn ed_q_opt(side: &GainMeasure, rate: f64) -> Result<f64> {
    let k = rate_factor(rate)?;
    let state = solve_target_k(side, k)?;
    ed_given_target_k(side, k, state.gamma_bar)
}

/// Closed form for exponentially distributed side-information gain with mean
/// `mean_gain`: `(1/m) e^(K/m) E1(K/m)`.
pub fn ed_rayleigh_closed(mean_gain: f64, rate: f64) -> Result<f64> {
    if !(mean_gain > 0.0 && mean_gain.is_finite()) {
        return Err(Error::Domain(format!("mean gain must be positive, got {mean_gain}")));
    }
    let k = rate_factor(rate)?;
    Ok(scaled_e1(k / mean_gain)? / mean_gain)
}

// The functions below take K = 2^(2R) directly so callers holding K exactly
// (e.g. K = 1 + h for a capacity-achieving channel code) avoid a log/exp trip.

pub(crate) fn ed_given_target_k(side: &GainMeasure, k: f64, gamma_bar: f64) -> Result<f64> {
    let below = if gamma_bar > 0.0 {
        side.stieltjes(1.0, 0.0, gamma_bar)?
    } else {
        0.0
    };
    if k.is_infinite() {
        return Ok(below);
    }
    let a = (1.0 + gamma_bar) * k - gamma_bar;
    Ok(below + side.stieltjes(a, gamma_bar, f64::INFINITY)?)
}

pub(crate) fn residual_k(side: &GainMeasure, k: f64, gamma_bar: f64) -> Result<f64> {
    let level = side.pdf(gamma_bar);
    if level.is_infinite() {
        return Ok(f64::NEG_INFINITY);
    }
    let a = (1.0 + gamma_bar) * k - gamma_bar;
    let head = side.expect_between(|g| (a + g).powi(-2), gamma_bar, f64::INFINITY, &[a])?;
    // p(gamma_bar) times the integral of (a + g)^-2 over [gamma_bar, inf).
    Ok(head - level / ((1.0 + gamma_bar) * k))
}

pub(crate) fn solve_target_k(side: &GainMeasure, k: f64) -> Result<TargetState> {
    let boundary = TargetState {
        gamma_bar: 0.0,
        alpha_star: side.pdf(0.0),
        at_boundary: true,
    };
    // A nonincreasing density makes the residual nonpositive at zero.
    if side.law().shape() <= 1.0 {
        return Ok(boundary);
    }
    let r0 = residual_k(side, k, 0.0)?;
    if r0 <= 0.0 {
        return Ok(boundary);
    }
    let mode = side.mode();
    let tol = side.tol().root_tol;
    let mut failure = None;
    let u = find_root_bisect(
        |u| match residual_k(side, k, u * mode) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        0.0,
        1.0,
        tol,
    )
    .map_err(|e| {
        Error::TargetState(format!(
            "no root of the target residual on (0, {mode:e}) for K = {k:e}: {e}"
        ))
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let gamma_bar = u * mode;
    Ok(TargetState {
        gamma_bar,
        alpha_star: side.pdf(gamma_bar),
        at_boundary: false,
    })
}
