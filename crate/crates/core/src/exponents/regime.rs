use std::fmt;

use super::{exponent_exact, ExponentKind};
use crate::error::{Error, Result};

/// Schemes known to attain the optimal exponent at a given `(L_s, L_c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Achiever {
    Hda,
    UncodedAndHda,
    Jds,
    Uncharacterized,
}

impl Achiever {
    pub fn classify(ls: f64, lc: f64) -> Self {
        if lc >= 1.0 {
            Self::Hda
        } else if ls <= 1.0 {
            Self::UncodedAndHda
        } else if ls <= 1.0 + lc {
            Self::Jds
        } else {
            Self::Uncharacterized
        }
    }

    fn schemes(&self) -> &'static [ExponentKind] {
        match self {
            Self::Hda => &[ExponentKind::Shda],
            Self::UncodedAndHda => &[ExponentKind::Uncoded, ExponentKind::Shda],
            Self::Jds => &[ExponentKind::Jds],
            Self::Uncharacterized => &[],
        }
    }
}

impl fmt::Display for Achiever {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Hda => "HDA",
            Self::UncodedAndHda => "uncoded & HDA",
            Self::Jds => "JDS",
            Self::Uncharacterized => "uncharacterized",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeRow {
    pub ls: f64,
    pub lc: f64,
    pub achiever: Achiever,
    /// Optimal exponent, or the best scheme exponent where uncharacterized.
    pub optimal: f64,
    pub upper: f64,
    pub best_scheme: f64,
}

const SCHEMES: [ExponentKind; 4] = [
    ExponentKind::Uncoded,
    ExponentKind::Sscc,
    ExponentKind::Jds,
    ExponentKind::Shda,
];

/// Labels each grid point with its optimal schemes, checking that every
/// labeled scheme attains the optimal exponent and no scheme exceeds it.
pub fn regime_map(ls_grid: &[f64], lc_grid: &[f64]) -> Result<Vec<RegimeRow>> {
    let mut rows = Vec::with_capacity(ls_grid.len() * lc_grid.len());
    for &ls in ls_grid {
        for &lc in lc_grid {
            if !(ls > 0.0 && lc > 0.0 && ls.is_finite() && lc.is_finite()) {
                return Err(Error::Domain(format!("shapes must be positive, got ({ls}, {lc})")));
            }
            let achiever = Achiever::classify(ls, lc);
            let optimal = exponent_exact(ExponentKind::Optimal, ls, lc).value;
            let upper = exponent_exact(ExponentKind::Upper, ls, lc).value;
            let best_scheme = SCHEMES
                .iter()
                .map(|&k| exponent_exact(k, ls, lc).value)
                .fold(0.0, f64::max);
            let tol = 1e-12;
            if best_scheme > optimal + tol || optimal > upper + tol {
                return Err(Error::Inconsistent(format!(
                    "at ({ls}, {lc}): best scheme {best_scheme}, optimal {optimal}, upper {upper}"
                )));
            }
            for &k in achiever.schemes() {
                let v = exponent_exact(k, ls, lc).value;
                if (v - optimal).abs() > tol {
                    return Err(Error::Inconsistent(format!(
                        "{achiever} labeled at ({ls}, {lc}) but {k} gives {v} < {optimal}"
                    )));
                }
            }
            rows.push(RegimeRow {
                ls,
                lc,
                achiever,
                optimal,
                upper,
                best_scheme,
            });
        }
    }
    Ok(rows)
}
