//! Shared fixtures for the benchmarks.

use jscc_core::{FadingPair, SystemConfig, Tolerances};

/// Fading measures at shapes `(lc, ls)` and average SNR `snr_db`.
pub fn fading(lc: f64, ls: f64, snr_db: f64) -> FadingPair {
    SystemConfig::from_db(lc, ls, snr_db, Tolerances::default())
        .and_then(|c| c.fading())
        .expect("benchmark configuration is valid")
}
