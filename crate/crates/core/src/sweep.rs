//! Distortion curves over an SNR grid: both lower bounds and every optimized
//! scheme at each point. Points are computed in parallel and returned in
//! input order.

use rayon::prelude::*;

use crate::bounds::{informed_ed_in, partially_informed_ed_in};
use crate::error::{Error, Result};
use crate::fading::SystemConfig;
use crate::numerics::Tolerances;
use crate::schemes::{optimize_scheme_in, Optimized, SchemeKind};

/// Inclusive dB grid `lo, lo+step, ..., <= hi`.
pub fn snr_grid_db(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite() && step.is_finite()) {
        return Err(Error::InvalidParams("SNR range must be finite".into()));
    }
    if !(step > 0.0) {
        return Err(Error::InvalidParams(format!("SNR step must be positive, got {step}")));
    }
    if !(hi > lo) {
        return Err(Error::InvalidParams(format!("empty SNR range {lo}:{hi}")));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| lo + step * i as f64).collect())
}

/// Results at one SNR point. Schemes that were not requested are `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub snr_db: f64,
    pub informed: f64,
    pub partially_informed: f64,
    pub uncoded: Option<Optimized>,
    pub sscc: Option<Optimized>,
    pub jds: Option<Optimized>,
    pub hda: Option<Optimized>,
    pub shda: Option<Optimized>,
}

impl SweepRow {
    pub fn scheme(&self, kind: SchemeKind) -> Option<&Optimized> {
        match kind {
            SchemeKind::Uncoded => self.uncoded.as_ref(),
            SchemeKind::Sscc => self.sscc.as_ref(),
            SchemeKind::Jds => self.jds.as_ref(),
            SchemeKind::Hda => self.hda.as_ref(),
            SchemeKind::Shda => self.shda.as_ref(),
        }
    }
}

/// Computes one row at `snr_db`.
pub fn sweep_point(lc: f64, ls: f64, snr_db: f64, kinds: &[SchemeKind], tol: &Tolerances) -> Result<SweepRow> {
    let cfg = SystemConfig::from_db(lc, ls, snr_db, *tol)?;
    let fp = cfg.fading()?;
    let run = |k: SchemeKind| -> Result<Option<Optimized>> {
        if kinds.contains(&k) {
            optimize_scheme_in(k, &fp).map(Some)
        } else {
            Ok(None)
        }
    };
    Ok(SweepRow {
        snr_db,
        informed: informed_ed_in(&fp)?,
        partially_informed: partially_informed_ed_in(&fp)?,
        uncoded: run(SchemeKind::Uncoded)?,
        sscc: run(SchemeKind::Sscc)?,
        jds: run(SchemeKind::Jds)?,
        hda: run(SchemeKind::Hda)?,
        shda: run(SchemeKind::Shda)?,
    })
}

/// Computes every row of the grid in parallel.
pub fn sweep(lc: f64, ls: f64, snr_db: &[f64], kinds: &[SchemeKind], tol: &Tolerances) -> Result<Vec<SweepRow>> {
    snr_db
        .par_iter()
        .map(|&db| sweep_point(lc, ls, db, kinds, tol))
        .collect()
}
