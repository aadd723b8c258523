//! Gamma (Nakagami power) fading laws, the normalized-SNR system setup,
//! sampling, and the high-SNR rate function of a Gamma gain.

mod measure;

pub use measure::{FadingPair, GainMeasure};

use rand::Rng;
use rand_distr::Distribution;

use crate::error::{domain, Result};
use crate::numerics::{find_root_bisect, gamma_inc_reg, gamma_inc_reg_upper, ln_gamma, Tolerances};

/// Gamma distribution with shape `L` and scale `theta`, used for fading power gains.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaLaw {
    shape: f64,
    scale: f64,
    // -L ln(theta) - ln Gamma(L)
    ln_norm: f64,
}

impl GammaLaw {
    pub fn new(shape: f64, scale: f64) -> Result<Self> {
        if !(shape > 0.0 && shape.is_finite()) {
            return Err(domain(format!("gamma shape must be positive, got {shape}")));
        }
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(domain(format!("gamma scale must be positive, got {scale}")));
        }
        Ok(Self {
            shape,
            scale,
            ln_norm: -shape * scale.ln() - ln_gamma(shape),
        })
    }

    /// Unit-mean law with the given shape (scale `1/L`).
    pub fn normalized(shape: f64) -> Result<Self> {
        if !(shape > 0.0 && shape.is_finite()) {
            return Err(domain(format!("gamma shape must be positive, got {shape}")));
        }
        Self::new(shape, 1.0 / shape)
    }

    pub fn shape(&self) -> f64 {
        self.shape
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn mean(&self) -> f64 {
        self.shape * self.scale
    }

    pub fn variance(&self) -> f64 {
        self.shape * self.scale * self.scale
    }

    /// Location of the density maximum; zero when the density is decreasing.
    pub fn mode(&self) -> f64 {
        ((self.shape - 1.0) * self.scale).max(0.0)
    }

    /// Density at `x >= 0`. For shape below one the value at zero is `+inf`.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !(x >= 0.0) {
            return Err(domain(format!("gamma density needs x >= 0, got {x}")));
        }
        Ok(self.density(x))
    }

    pub(crate) fn density(&self, x: f64) -> f64 {
        if x == 0.0 {
            return if self.shape < 1.0 {
                f64::INFINITY
            } else if self.shape == 1.0 {
                1.0 / self.scale
            } else {
                0.0
            };
        }
        if x.is_infinite() {
            return 0.0;
        }
        self.ln_density(x).exp()
    }

    pub(crate) fn ln_density(&self, x: f64) -> f64 {
        self.ln_norm + (self.shape - 1.0) * x.ln() - x / self.scale
    }

    /// Density of `ln X` at `t`.
    pub(crate) fn log_variable_density(&self, t: f64) -> f64 {
        (self.ln_norm + self.shape * t - t.exp() / self.scale).exp()
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        gamma_inc_reg(self.shape, x / self.scale).unwrap_or(1.0)
    }

    /// `P(X > x)`, accurate deep in the upper tail.
    pub fn sf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 1.0;
        }
        gamma_inc_reg_upper(self.shape, x / self.scale).unwrap_or(0.0)
    }

    /// Smallest `x` whose upper-tail mass is at most `tail_mass`.
    pub fn truncation_bound(&self, tail_mass: f64) -> f64 {
        if tail_mass >= 1.0 {
            return 0.0;
        }
        let excess = |x: f64| self.sf(x) - tail_mass;
        let mut hi = self.mean().max(self.scale);
        while excess(hi) > 0.0 {
            hi *= 2.0;
        }
        find_root_bisect(excess, 0.0, hi, 1e-13 * hi).unwrap_or(hi)
    }

    /// A point below which the law carries at most `mass`, from the bound
    /// `P(L, y) <= y^L / Gamma(L + 1)`.
    pub(crate) fn lower_bound(&self, mass: f64) -> f64 {
        let ln_y = (mass.ln() + ln_gamma(self.shape + 1.0)) / self.shape;
        self.scale * ln_y.min(0.0).exp()
    }

    /// Draws one gain from the law.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.sampler().sample(rng)
    }

    pub(crate) fn sampler(&self) -> rand_distr::Gamma<f64> {
        rand_distr::Gamma::new(self.shape, self.scale).expect("validated gamma parameters")
    }
}

/// Gamma density `theta^-L Gamma(L)^-1 x^(L-1) e^(-x/theta)`.
pub fn gamma_pdf(law: &GammaLaw, x: f64) -> Result<f64> {
    law.pdf(x)
}

/// Unit-mean Gamma law with shape `L`.
pub fn make_normalized(shape: f64) -> Result<GammaLaw> {
    GammaLaw::normalized(shape)
}

/// Upper truncation point of `law` leaving `tail_mass` beyond it.
pub fn truncation_bound(law: &GammaLaw, tail_mass: f64) -> f64 {
    law.truncation_bound(tail_mass)
}

/// Draws a gain from `law` using the caller's stream.
pub fn sample_gain<R: Rng + ?Sized>(law: &GammaLaw, stream: &mut R) -> f64 {
    law.sample(stream)
}

/// Exponential decay rate of a Gamma(L) gain density at `gain = rho^-alpha`.
pub fn snr_rate_function(shape: f64, alpha: f64) -> f64 {
    if alpha >= 0.0 {
        shape * alpha
    } else {
        f64::INFINITY
    }
}

/// Normalized setup: unit-mean Gamma channel and side-information gains,
/// both scaled by the average SNR `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemConfig {
    pub lc: f64,
    pub ls: f64,
    pub rho: f64,
    pub tol: Tolerances,
}

impl SystemConfig {
    pub fn new(lc: f64, ls: f64, rho: f64, tol: Tolerances) -> Result<Self> {
        for (name, v) in [("L_c", lc), ("L_s", ls), ("rho", rho)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        tol.validate()?;
        Ok(Self { lc, ls, rho, tol })
    }

    /// Same as [`SystemConfig::new`] with the SNR given as `10 log10 rho`.
    pub fn from_db(lc: f64, ls: f64, snr_db: f64, tol: Tolerances) -> Result<Self> {
        Self::new(lc, ls, db_to_linear(snr_db), tol)
    }

    pub fn channel_law(&self) -> GammaLaw {
        GammaLaw::normalized(self.lc).expect("validated shape")
    }

    pub fn side_law(&self) -> GammaLaw {
        GammaLaw::normalized(self.ls).expect("validated shape")
    }

    pub fn with_rho(&self, rho: f64) -> Result<Self> {
        Self::new(self.lc, self.ls, rho, self.tol)
    }

    /// Integration measures for the SNR-scaled channel and side gains.
    pub fn fading(&self) -> Result<FadingPair> {
        FadingPair::new(self)
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}
