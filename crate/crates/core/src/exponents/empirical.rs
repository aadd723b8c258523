use crate::error::{Error, Result};

/// Fraction of the highest-SNR points used by default.
pub const DEFAULT_WINDOW: f64 = 0.4;

/// Least-squares fit of `-ln ED = slope ln(rho) + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentFit {
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute deviation of the fitted line from the data.
    pub residual: f64,
    pub points: usize,
}

/// Estimates the distortion exponent from the top `window` fraction of an
/// ascending SNR grid (linear `rho`).
pub fn empirical_exponent(snr: &[f64], ed: &[f64], window: f64) -> Result<ExponentFit> {
    let bad = |m: String| Err(Error::InvalidParams(m));
    if snr.len() != ed.len() {
        return bad(format!("{} SNR values but {} distortions", snr.len(), ed.len()));
    }
    if !(window > 0.0 && window <= 1.0) {
        return bad(format!("window must lie in (0, 1], got {window}"));
    }
    if snr.windows(2).any(|w| !(w[1] >= w[0])) || snr.iter().any(|&r| !(r > 0.0)) {
        return bad("SNR values must be positive and ascending".into());
    }
    if ed.iter().any(|&d| !(d > 0.0 && d.is_finite())) {
        return bad("distortions must be positive and finite".into());
    }
    let n = snr.len();
    let take = ((window * n as f64).ceil() as usize).min(n);
    if take < 4 {
        return bad(format!("need at least 4 points in the fit window, have {take}"));
    }
    let xs: Vec<f64> = snr[n - take..].iter().map(|r| r.ln()).collect();
    let ys: Vec<f64> = ed[n - take..].iter().map(|d| -d.ln()).collect();
    let mx = xs.iter().sum::<f64>() / take as f64;
    let my = ys.iter().sum::<f64>() / take as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if !(sxx > 1e-300) {
        return Err(Error::InvalidParams("degenerate fit: all SNR values are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - slope * x - intercept).abs())
        .fold(0.0, f64::max);
    Ok(ExponentFit {
        slope,
        intercept,
        residual,
        points: take,
    })
}
