use jscc_core::bounds::{informed_ed_in, partially_informed_ed_in};
use jscc_core::montecarlo::{mc_ed, McTarget};
use jscc_core::schemes::optimize_scheme_in;
use jscc_core::{SchemeKind, SystemConfig};

use crate::settings::{CliError, Settings};
use crate::Common;

pub const DEFAULT_SNR: &str = "20";
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0;

pub const TARGETS: [&str; 7] = ["informed", "pi", "uncoded", "sscc", "jds", "hda", "shda"];

/// One target with its quadrature value and Monte Carlo estimate.
pub struct Comparison {
    pub name: &'static str,
    pub quad: f64,
    pub mc: f64,
    pub stderr: f64,
}

impl Comparison {
    pub fn z(&self) -> f64 {
        if self.stderr > 0.0 {
            (self.mc - self.quad).abs() / self.stderr
        } else if self.mc == self.quad {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

pub fn parse_targets(spec: Option<&str>) -> Result<Vec<&'static str>, CliError> {
    match spec.map(str::to_ascii_lowercase) {
        None => Ok(TARGETS.to_vec()),
        Some(s) if s == "all" => Ok(TARGETS.to_vec()),
        Some(s) => {
            let s = if s == "s-hda" { "shda".to_string() } else { s };
            TARGETS
                .iter()
                .find(|&&t| t == s)
                .map(|&t| vec![t])
                .ok_or_else(|| CliError::usage(anyhow::anyhow!("unknown target '{s}'")))
        }
    }
}

/// Optimizes each scheme target, then estimates every target by sampling
/// with the given seed.
pub fn compare(
    cfg: &SystemConfig,
    targets: &[&'static str],
    samples: u64,
    seed: u64,
) -> Result<Vec<Comparison>, CliError> {
    let fp = cfg.fading()?;
    let mut out = Vec::with_capacity(targets.len());
    for &name in targets {
        let (target, quad) = match name {
            "informed" => (McTarget::Informed, informed_ed_in(&fp)?),
            "pi" => (McTarget::PartiallyInformed, partially_informed_ed_in(&fp)?),
            other => {
                let kind: SchemeKind = other.parse()?;
                let o = optimize_scheme_in(kind, &fp)?;
                (McTarget::Scheme(o.params), o.distortion)
            }
        };
        let e = mc_ed(&target, cfg, samples, seed)?;
        out.push(Comparison {
            name,
            quad,
            mc: e.mean,
            stderr: e.stderr,
        });
    }
    Ok(out)
}

pub fn run(
    common: &Common,
    snr_db: Option<String>,
    scheme: Option<String>,
    samples: Option<u64>,
    seed: Option<u64>,
) -> Result<(), CliError> {
    let s = Settings::resolve(common)?;
    let tol = s.validated_tol()?;
    let dbs = s.snr_points(snr_db, Some(DEFAULT_SNR))?;
    let targets = parse_targets(s.string(scheme, "scheme").as_deref())?;
    let samples = s.number(samples, "samples", DEFAULT_SAMPLES)?;
    let seed = s.number(seed, "seed", DEFAULT_SEED)?;
    println!(
        "{:>8} {:<10} {:>16} {:>16} {:>12} {:>7}",
        "snr_db", "target", "quadrature", "monte_carlo", "stderr", "z"
    );
    for db in dbs {
        let cfg = SystemConfig::from_db(s.lc, s.ls, db, tol)?;
        for c in compare(&cfg, &targets, samples, seed)? {
            println!(
                "{db:>8.3} {:<10} {:>16.8e} {:>16.8e} {:>12.4e} {:>7.3}",
                c.name,
                c.quad,
                c.mc,
                c.stderr,
                c.z()
            );
        }
    }
    Ok(())
}
