//! Lower bounds on the expected distortion: the informed encoder (knows both
//! fading states) and the partially informed encoder (knows the channel state
//! only), plus the gap diagnostic between them.

use crate::error::Result;
use crate::fading::{FadingPair, GainMeasure, SystemConfig};
use crate::numerics::Tolerances;
use crate::wyner_ziv::{ed_given_target_k, solve_target_k};

/// Informed-encoder distortion at fixed states: `1 / ((1+h)(1+gamma))`.
pub fn informed_conditional(h: f64, gamma: f64) -> f64 {
    1.0 / ((1.0 + h) * (1.0 + gamma))
}

/// `E[1/(1+H)] E[1/(1+Gamma)]`.
pub fn informed_ed(cfg: &SystemConfig) -> Result<f64> {
    informed_ed_in(&cfg.fading()?)
}

pub fn informed_ed_in(fp: &FadingPair) -> Result<f64> {
    let ch = fp.channel.stieltjes(1.0, 0.0, f64::INFINITY)?;
    let si = fp.side.stieltjes(1.0, 0.0, f64::INFINITY)?;
    Ok(ch * si)
}

/// Best single-layer Wyner-Ziv distortion when the channel delivers its
/// capacity `1/2 log2(1+h)`, i.e. `K = 2^(2C) = 1 + h`.
pub fn partially_informed_conditional(side: &GainMeasure, h: f64) -> Result<f64> {
    let k = 1.0 + h;
    let state = solve_target_k(side, k)?;
    ed_given_target_k(side, k, state.gamma_bar)
}

/// `E_H[ED_Q*(C(H))]` with the target state re-solved for every channel gain.
pub fn partially_informed_ed(cfg: &SystemConfig) -> Result<f64> {
    partially_informed_ed_in(&cfg.fading()?)
}

pub fn partially_informed_ed_in(fp: &FadingPair) -> Result<f64> {
    let side = &fp.side;
    if side.law().shape() <= 1.0 {
        // The target is zero for every h, so the inner term is a plain Stieltjes transform.
        return fp
            .channel
            .try_expect_between(|h| side.stieltjes(1.0 + h, 0.0, f64::INFINITY), 0.0, f64::INFINITY, &[]);
    }
    fp.channel
        .try_expect_between(|h| partially_informed_conditional(side, h), 0.0, f64::INFINITY, &[])
}

/// One row of the informed/partially-informed gap table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRow {
    pub ls: f64,
    pub informed: f64,
    pub partially_informed: f64,
    pub gap: f64,
    /// `sigma (1 + 2 E[H])` with `sigma^2 = 1/L_s` the side-gain variance.
    pub gap_bound: f64,
}

/// Gap between the two lower bounds for each side-information shape in `ls_list`.
pub fn bound_gap_report(lc: f64, rho: f64, ls_list: &[f64], tol: &Tolerances) -> Result<Vec<GapRow>> {
    ls_list
        .iter()
        .map(|&ls| {
            let cfg = SystemConfig::new(lc, ls, rho, *tol)?;
            let fp = cfg.fading()?;
            let informed = informed_ed_in(&fp)?;
            let partially_informed = partially_informed_ed_in(&fp)?;
            Ok(GapRow {
                ls,
                informed,
                partially_informed,
                gap: partially_informed - informed,
                gap_bound: ls.powf(-0.5) * (1.0 + 2.0 * rho),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::exp_integral_e1;

    fn cfg(lc: f64, ls: f64, rho: f64) -> SystemConfig {
        SystemConfig::new(lc, ls, rho, Tolerances::default()).unwrap()
    }

    #[test]
    fn informed_fixed_state() {
        assert_eq!(informed_conditional(1.0, 1.0), 0.25);
    }

    #[test]
    fn informed_rayleigh_closed_form() {
        let e = std::f64::consts::E * exp_integral_e1(1.0).unwrap();
        let v = informed_ed(&cfg(1.0, 1.0, 1.0)).unwrap();
        assert!((v - e * e).abs() < 1e-10);
        assert!((v - 0.35563).abs() < 1e-5);
    }

    #[test]
    fn vanishing_snr_gives_unit_distortion() {
        for (lc, ls) in [(1.0, 1.0), (0.5, 2.0)] {
            let c = cfg(lc, ls, 1e-9);
            assert!((informed_ed(&c).unwrap() - 1.0).abs() < 1e-8);
            assert!((partially_informed_ed(&c).unwrap() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn bounds_are_ordered_and_monotone_in_snr() {
        for (lc, ls) in [(1.0, 2.0), (0.5, 1.5), (2.0, 0.5)] {
            let mut prev = (f64::INFINITY, f64::INFINITY);
            for db in [0.0, 10.0, 20.0, 30.0] {
                let c = SystemConfig::from_db(lc, ls, db, Tolerances::default()).unwrap();
                let inf = informed_ed(&c).unwrap();
                let pi = partially_informed_ed(&c).unwrap();
                assert!(inf <= pi + 1e-12, "({lc}, {ls}, {db})");
                assert!(inf <= prev.0 && pi <= prev.1);
                prev = (inf, pi);
            }
        }
    }

    #[test]
    fn gap_report_rows() {
        let rows = bound_gap_report(1.0, 10.0, &[1.0, 2.0, 100.0], &Tolerances::default()).unwrap();
        for r in &rows {
            assert!(r.gap >= 0.0);
            assert!(r.gap <= r.gap_bound);
        }
        assert!(rows[2].gap < rows[1].gap);
    }
}
