use std::cell::RefCell;

use super::{GammaLaw, SystemConfig};
use crate::error::{domain, Result};
use crate::numerics::{integrate_with_breaks, Tolerances};

// Lower-tail mass discarded below the integration domain; far below any
// tolerance the integrands (bounded by one) are compared against.
const LOWER_MASS: f64 = 1e-40;
const MIN_LOG: f64 = -700.0;

/// Expectations over a gain `G = snr * X` with `X` drawn from a Gamma law.
///
/// Integration runs over `t = ln X` so that densities with shape below one
/// (singular at zero) and the wide dynamic range of high SNR are both handled
/// without special cases. The law itself is never rescaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainMeasure {
    law: GammaLaw,
    snr: f64,
    t_lo: f64,
    t_hi: f64,
    tol: Tolerances,
}

impl GainMeasure {
    pub fn new(law: GammaLaw, snr: f64, tol: &Tolerances) -> Result<Self> {
        if !(snr > 0.0 && snr.is_finite()) {
            return Err(domain(format!("SNR must be positive and finite, got {snr}")));
        }
        tol.validate()?;
        let t_hi = law.truncation_bound(tol.tail_mass).ln();
        let t_lo = law.lower_bound(LOWER_MASS).ln().max(MIN_LOG);
        Ok(Self {
            law,
            snr,
            t_lo,
            t_hi,
            tol: *tol,
        })
    }

    pub fn law(&self) -> &GammaLaw {
        &self.law
    }

    pub fn snr(&self) -> f64 {
        self.snr
    }

    pub fn tol(&self) -> &Tolerances {
        &self.tol
    }

    /// Density of the scaled gain at `g`.
    pub fn pdf(&self, g: f64) -> f64 {
        self.law.density(g / self.snr) / self.snr
    }

    pub fn cdf(&self, g: f64) -> f64 {
        self.law.cdf(g / self.snr)
    }

    /// `P(G > g)`, accurate in the upper tail.
    pub fn sf(&self, g: f64) -> f64 {
        self.law.sf(g / self.snr)
    }

    /// Mode of the scaled gain.
    pub fn mode(&self) -> f64 {
        self.snr * self.law.mode()
    }

    /// Largest gain kept in the integration domain.
    pub fn upper_gain(&self) -> f64 {
        self.snr * self.t_hi.exp()
    }

    /// `E[f(G)]` over the truncated domain.
    pub fn expect<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        self.expect_between(f, 0.0, f64::INFINITY, &[])
    }

    /// `E[f(G); lo < G < hi]`, with optional extra break points (in gain units)
    /// where `f` has kinks or sharp features.
    pub fn expect_between<F: Fn(f64) -> f64>(&self, f: F, lo: f64, hi: f64, breaks: &[f64]) -> Result<f64> {
        let ta = self.log_coord(lo);
        let tb = self.log_coord(hi);
        if !(ta < tb) {
            return Ok(0.0);
        }
        let mut points = vec![ta];
        let unit_gain = -self.snr.ln();
        let peak = (self.law.shape * self.law.scale).ln();
        for t in [unit_gain, peak]
            .into_iter()
            .chain(breaks.iter().filter(|&&g| g > 0.0).map(|&g| (g / self.snr).ln()))
        {
            if t > ta && t < tb {
                points.push(t);
            }
        }
        points.sort_by(f64::total_cmp);
        points.dedup();
        points.push(tb);
        let snr = self.snr;
        let law = self.law;
        let g = |t: f64| {
            let w = law.log_variable_density(t);
            if w == 0.0 {
                0.0
            } else {
                f(snr * t.exp()) * w
            }
        };
        integrate_with_breaks(g, &points, &self.tol).map(|r| r.value)
    }

    /// Like [`GainMeasure::expect_between`] for a fallible integrand; the first
    /// integrand error aborts the result.
    pub fn try_expect_between<F: Fn(f64) -> Result<f64>>(&self, f: F, lo: f64, hi: f64, breaks: &[f64]) -> Result<f64> {
        let failure = RefCell::new(None);
        let value = self.expect_between(
            |g| match f(g) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    0.0
                }
            },
            lo,
            hi,
            breaks,
        );
        match failure.into_inner() {
            Some(e) => Err(e),
            None => value,
        }
    }

    /// Partial Stieltjes transform `E[1 / (a + G); lo < G < hi]`.
    pub fn stieltjes(&self, a: f64, lo: f64, hi: f64) -> Result<f64> {
        self.expect_between(|g| 1.0 / (a + g), lo, hi, &[a])
    }

    fn log_coord(&self, g: f64) -> f64 {
        if g <= 0.0 {
            self.t_lo
        } else if g.is_infinite() {
            self.t_hi
        } else {
            (g / self.snr).ln().clamp(self.t_lo, self.t_hi)
        }
    }
}

/// Integration measures for the channel gain `H` and side-information gain `Gamma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingPair {
    pub channel: GainMeasure,
    pub side: GainMeasure,
}

impl FadingPair {
    pub fn new(cfg: &SystemConfig) -> Result<Self> {
        Ok(Self {
            channel: GainMeasure::new(cfg.channel_law(), cfg.rho, &cfg.tol)?,
            side: GainMeasure::new(cfg.side_law(), cfg.rho, &cfg.tol)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scaled_e1;

    fn measure(l: f64, snr: f64) -> GainMeasure {
        GainMeasure::new(GammaLaw::normalized(l).unwrap(), snr, &Tolerances::default()).unwrap()
    }

    #[test]
    fn total_mass_is_one() {
        for l in [0.3, 0.5, 1.0, 1.5, 2.0, 5.0, 100.0] {
            for snr in [1e-3, 1.0, 1e7] {
                let m = measure(l, snr).expect(|_| 1.0).unwrap();
                assert!((m - 1.0).abs() < 2e-10, "L = {l}, snr = {snr}: {m}");
            }
        }
    }

    #[test]
    fn mean_gain_equals_snr() {
        for l in [0.3, 1.0, 2.0, 5.0] {
            for snr in [0.1, 10.0, 1e5] {
                let m = measure(l, snr).expect(|g| g).unwrap();
                assert!((m / snr - 1.0).abs() < 1e-8, "L = {l}, snr = {snr}");
            }
        }
    }

    #[test]
    fn exponential_stieltjes_matches_e1_form() {
        for snr in [1.0, 10.0, 1e3, 1e6] {
            for a in [1.0, 4.0, 1e3] {
                let m = measure(1.0, snr);
                let q = m.stieltjes(a, 0.0, f64::INFINITY).unwrap();
                let exact = scaled_e1(a / snr).unwrap() / snr;
                assert!((q - exact).abs() < 1e-10 * exact, "snr {snr}, a {a}: {q} vs {exact}");
            }
        }
    }

    #[test]
    fn partial_ranges_add_up() {
        let m = measure(2.0, 50.0);
        let whole = m.stieltjes(1.0, 0.0, f64::INFINITY).unwrap();
        let left = m.stieltjes(1.0, 0.0, 20.0).unwrap();
        let right = m.stieltjes(1.0, 20.0, f64::INFINITY).unwrap();
        assert!((left + right - whole).abs() < 1e-12);
        assert_eq!(m.stieltjes(1.0, 30.0, 20.0).unwrap(), 0.0);
    }

    #[test]
    fn probability_of_interval_matches_cdf() {
        let m = measure(0.6, 30.0);
        let p = m.expect_between(|_| 1.0, 3.0, 80.0, &[]).unwrap();
        assert!((p - (m.cdf(80.0) - m.cdf(3.0))).abs() < 1e-10);
    }
}
