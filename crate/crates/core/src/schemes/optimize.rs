use std::sync::Mutex;

use super::{expected_distortion_in, SchemeKind, SchemeParams};
use crate::error::{Error, Result};
use crate::fading::{FadingPair, SystemConfig};
use crate::numerics::{minimize_box_with, Axis, SearchOptions};
use crate::wyner_ziv::solve_target;

/// Optimized parameters and the distortion they achieve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Optimized {
    pub params: SchemeParams,
    pub distortion: f64,
}

/// Binning rate minimizing the SSCC distortion for channel rate `rc` when the
/// source code targets side-information gain `gamma_bar`.
pub fn sscc_binning_rate(rc: f64, gamma_bar: f64) -> f64 {
    let kc1 = (2.0 * rc).exp2() - 1.0;
    (0.5 * (1.0 + (1.0 + gamma_bar) * kc1).log2() - rc).max(0.0)
}

/// Minimizes the expected distortion of `kind` over its parameters.
pub fn optimize_scheme(kind: SchemeKind, cfg: &SystemConfig) -> Result<Optimized> {
    optimize_scheme_in(kind, &cfg.fading()?)
}

pub fn optimize_scheme_in(kind: SchemeKind, fp: &FadingPair) -> Result<Optimized> {
    let rho = fp.channel.snr();
    let tol = fp.channel.tol().opt_tol;
    // Rates of interest scale like (r/2) log2(rho) with r <= 2.
    let rate_hi = (1.0 + rho).log2() + 2.0;
    let half_rate_hi = 0.5 * (1.0 + rho).log2() + 2.0;
    let (eta2_lo, eta2_hi) = eta2_range(rho);
    let objective = Objective::new(fp);

    match kind {
        SchemeKind::Uncoded => {
            let params = SchemeParams::Uncoded;
            Ok(Optimized {
                params,
                distortion: expected_distortion_in(&params, fp)?,
            })
        }
        SchemeKind::Jds => {
            let f = |x: &[f64]| objective.eval(SchemeParams::Jds { rj: x[0] });
            let r = minimize_box_with(f, &[Axis::linear(1e-3, rate_hi)], &SearchOptions::new(tol).grid(33));
            objective.finish(SchemeParams::Jds { rj: r.argmin[0] })
        }
        SchemeKind::Sscc => {
            let side = &fp.side;
            let rs_for = |rc: f64| -> f64 {
                match solve_target(side, rc) {
                    Ok(t) => sscc_binning_rate(rc, t.gamma_bar),
                    Err(_) => 0.0,
                }
            };
            // For a fixed channel rate the best binning rate is known, so the
            // 1-D profile gives a strong starting point for the joint search.
            let profile = |x: &[f64]| {
                objective.eval(SchemeParams::Sscc {
                    rc: x[0],
                    rs: rs_for(x[0]),
                })
            };
            let axes_rc = [Axis::linear(1e-3, half_rate_hi)];
            let p = minimize_box_with(profile, &axes_rc, &SearchOptions::new(tol).grid(33));
            let rc1 = p.argmin[0];
            let mut opts = SearchOptions::new(tol)
                .starts(4)
                .seed(vec![rc1, rs_for(rc1)])
                .seed(vec![rc1, 0.0]);
            for i in 0..17 {
                let rc = 1e-3 + (half_rate_hi - 1e-3) * i as f64 / 16.0;
                opts = opts.seed(vec![rc, rs_for(rc)]);
            }
            let f = |x: &[f64]| objective.eval(SchemeParams::Sscc { rc: x[0], rs: x[1] });
            let r = minimize_box_with(
                f,
                &[Axis::linear(1e-3, half_rate_hi), Axis::linear(0.0, half_rate_hi)],
                &opts,
            );
            objective.finish(SchemeParams::Sscc {
                rc: r.argmin[0],
                rs: r.argmin[1],
            })
        }
        SchemeKind::Hda => {
            let f = |x: &[f64]| {
                objective.eval(SchemeParams::Shda {
                    pd: 1.0,
                    eta: x[0].sqrt(),
                })
            };
            let r = minimize_box_with(f, &[Axis::log(eta2_lo, eta2_hi)], &SearchOptions::new(tol).grid(33));
            objective.finish(SchemeParams::Shda {
                pd: 1.0,
                eta: r.argmin[0].sqrt(),
            })
        }
        SchemeKind::Shda => {
            let hda = optimize_scheme_in(SchemeKind::Hda, fp)?;
            let SchemeParams::Shda { eta: eta_hda, .. } = hda.params else {
                unreachable!("HDA optimizer returns S-HDA parameters")
            };
            let seed_eta2 = (eta_hda * eta_hda).clamp(eta2_lo, eta2_hi);
            let opts = SearchOptions::new(tol)
                .grid(21)
                .starts(4)
                .seed(vec![1.0, seed_eta2])
                .seed(vec![0.0, 1.0]);
            let f = |x: &[f64]| {
                objective.eval(SchemeParams::Shda {
                    pd: x[0],
                    eta: x[1].sqrt(),
                })
            };
            let r = minimize_box_with(f, &[Axis::linear(0.0, 1.0), Axis::log(eta2_lo, eta2_hi)], &opts);
            objective.finish(SchemeParams::Shda {
                pd: r.argmin[0],
                eta: r.argmin[1].sqrt(),
            })
        }
    }
}

/// Search range for `eta^2`: `[rho^-2, rho^2]`, widened to at least
/// `[1e-4, 1e4]` so that low SNR still gets a nondegenerate interval.
pub(crate) fn eta2_range(rho: f64) -> (f64, f64) {
    ((rho.powi(-2)).min(1e-4), (rho * rho).max(1e4))
}

struct Objective<'a> {
    fp: &'a FadingPair,
    first_error: Mutex<Option<Error>>,
}

impl<'a> Objective<'a> {
    fn new(fp: &'a FadingPair) -> Self {
        Self {
            fp,
            first_error: Mutex::new(None),
        }
    }

    // Failed evaluations count as +inf so the search steers away from them.
    fn eval(&self, p: SchemeParams) -> f64 {
        match expected_distortion_in(&p, self.fp) {
            Ok(v) => v,
            Err(e) => {
                self.first_error.lock().unwrap().get_or_insert(e);
                f64::INFINITY
            }
        }
    }

    fn finish(&self, params: SchemeParams) -> Result<Optimized> {
        match expected_distortion_in(&params, self.fp) {
            Ok(distortion) => Ok(Optimized { params, distortion }),
            Err(e) => Err(self.first_error.lock().unwrap().take().unwrap_or(e)),
        }
    }
}
