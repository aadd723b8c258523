use super::SchemeParams;
use crate::error::Result;
use crate::fading::{FadingPair, SystemConfig};

/// Expected distortion of `params` under the fading setup `cfg`.
pub fn expected_distortion(params: &SchemeParams, cfg: &SystemConfig) -> Result<f64> {
    params.validate()?;
    expected_distortion_in(params, &cfg.fading()?)
}

/// As [`expected_distortion`] with prebuilt integration measures.
///
/// Every outage predicate is monotone in the side-information gain for a fixed
/// channel gain, so the inner integral splits at a closed-form threshold and
/// each piece is a partial Stieltjes transform of the side-gain law.
pub fn expected_distortion_in(params: &SchemeParams, fp: &FadingPair) -> Result<f64> {
    params.validate()?;
    let ch = &fp.channel;
    let side = &fp.side;
    const INF: f64 = f64::INFINITY;
    match *params {
        SchemeParams::Uncoded => uncoded(fp),
        SchemeParams::Sscc { rc, rs } => {
            let kc = (2.0 * rc).exp2();
            let k = (2.0 * (rc + rs)).exp2();
            // Channel decoding and Wyner-Ziv decoding fail independently.
            let p_ok = ch.sf(kc - 1.0);
            let side_only = side.stieltjes(1.0, 0.0, INF)?;
            let gamma_s = (k - 1.0) / (kc - 1.0) - 1.0;
            let decoded = if gamma_s > 0.0 {
                side.stieltjes(1.0, 0.0, gamma_s)? + side.stieltjes(k, gamma_s, INF)?
            } else {
                side.stieltjes(k, 0.0, INF)?
            };
            Ok((1.0 - p_ok) * side_only + p_ok * decoded)
        }
        SchemeParams::Jds { rj } => {
            let k = (2.0 * rj).exp2();
            let h_edge = k - 1.0;
            // Below h_edge decoding needs gamma > (k-1)/h - 1; above it never fails.
            let mixed = ch.try_expect_between(
                |h| {
                    let gamma_j = h_edge / h - 1.0;
                    Ok(side.stieltjes(1.0, 0.0, gamma_j)? + side.stieltjes(k, gamma_j, INF)?)
                },
                0.0,
                h_edge,
                &[],
            )?;
            Ok(mixed + ch.sf(h_edge) * side.stieltjes(k, 0.0, INF)?)
        }
        SchemeParams::Shda { pd: 0.0, .. } => uncoded(fp),
        SchemeParams::Shda { pd, eta } => {
            let pa = 1.0 - pd;
            let c2 = (pa.sqrt() - eta).powi(2);
            let eta2 = eta * eta;
            // Beyond h_star the outage threshold on gamma is negative.
            let h_star = if c2 < 1.0 { eta2 / (pd * (1.0 - c2)) } else { INF };
            ch.try_expect_between(
                |h| {
                    let a_dec = 1.0 + h * c2 + eta2 / pd;
                    if h >= h_star {
                        return side.stieltjes(a_dec, 0.0, INF);
                    }
                    let gamma_h = (c2 - 1.0 + eta2 / (pd * h)) / pd;
                    let b_out = 1.0 + h * pa / (1.0 + h * pd);
                    Ok(side.stieltjes(b_out, 0.0, gamma_h)? + side.stieltjes(a_dec, gamma_h, INF)?)
                },
                0.0,
                INF,
                &[h_star],
            )
        }
    }
}

fn uncoded(fp: &FadingPair) -> Result<f64> {
    let side = &fp.side;
    fp.channel
        .try_expect_between(|h| side.stieltjes(1.0 + h, 0.0, f64::INFINITY), 0.0, f64::INFINITY, &[])
}
