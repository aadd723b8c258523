//! Resolution of flags and config-file values into validated run settings,
//! and the error type that carries the process exit status.

use std::path::PathBuf;

use jscc_core::sweep::snr_grid_db;
use jscc_core::{Error as CoreError, SchemeKind, Tolerances};

use crate::config::ConfigFile;
use crate::Common;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

/// Fading shape used when neither a flag nor the config file sets one.
pub const DEFAULT_SHAPE: f64 = 1.0;

/// Error with the exit status it maps to.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    error: Option<anyhow::Error>,
}

impl CliError {
    pub fn usage(e: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_USAGE,
            error: Some(e.into()),
        }
    }

    pub fn numeric(e: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_NUMERIC,
            error: Some(e.into()),
        }
    }

    /// Verification failed; the report has already been printed.
    pub fn verify_failed() -> Self {
        Self {
            code: EXIT_VERIFY,
            error: None,
        }
    }

    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn message(&self) -> Option<&anyhow::Error> {
        self.error.as_ref()
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain(_) | CoreError::InvalidParams(_) | CoreError::InvalidTolerances(_) => Self::usage(e),
            _ => Self::numeric(e),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::numeric(anyhow::Error::new(e).context("I/O failure"))
    }
}

/// Settings common to all subcommands after merging flags over the config file.
#[derive(Debug, Clone)]
pub struct Settings {
    pub file: ConfigFile,
    pub lc: f64,
    pub ls: f64,
    pub tol: Tolerances,
}

impl Settings {
    /// Tolerances are returned unvalidated so `verify` can report them as a check.
    pub fn resolve(common: &Common) -> Result<Self, CliError> {
        let file = match &common.config {
            Some(p) => ConfigFile::load(p).map_err(CliError::usage)?,
            None => ConfigFile::default(),
        };
        let lc = file.pick(common.lc, "lc").map_err(CliError::usage)?;
        let ls = file.pick(common.ls, "ls").map_err(CliError::usage)?;
        let (lc, ls) = (lc.unwrap_or(DEFAULT_SHAPE), ls.unwrap_or(DEFAULT_SHAPE));
        for (name, v) in [("--lc", lc), ("--ls", ls)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::usage(anyhow::anyhow!("{name} must be positive, got {v}")));
            }
        }
        let d = Tolerances::default();
        let tol = Tolerances {
            quad_rel: file
                .pick(common.quad_rel, "quad_rel")
                .map_err(CliError::usage)?
                .unwrap_or(d.quad_rel),
            quad_abs: file
                .pick(common.quad_abs, "quad_abs")
                .map_err(CliError::usage)?
                .unwrap_or(d.quad_abs),
            root_tol: file
                .pick(common.root_tol, "root_tol")
                .map_err(CliError::usage)?
                .unwrap_or(d.root_tol),
            opt_tol: file
                .pick(common.opt_tol, "opt_tol")
                .map_err(CliError::usage)?
                .unwrap_or(d.opt_tol),
            tail_mass: file
                .pick(common.tail_mass, "tail_mass")
                .map_err(CliError::usage)?
                .unwrap_or(d.tail_mass),
        };
        Ok(Self { file, lc, ls, tol })
    }

    pub fn validated_tol(&self) -> Result<Tolerances, CliError> {
        self.tol.validate()?;
        Ok(self.tol)
    }

    /// SNR points in dB from the flag, the config file, or `default`.
    pub fn snr_points(&self, flag: Option<String>, default: Option<&str>) -> Result<Vec<f64>, CliError> {
        let spec = flag
            .or_else(|| self.file.raw("snr_db").map(str::to_string))
            .or_else(|| default.map(str::to_string))
            .ok_or_else(|| CliError::usage(anyhow::anyhow!("--snr-db is required")))?;
        parse_snr(&spec)
    }

    pub fn string(&self, flag: Option<String>, key: &str) -> Option<String> {
        flag.or_else(|| self.file.raw(key).map(str::to_string))
    }

    pub fn number<T>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, CliError>
    where
        T: std::str::FromStr,
        T::Err: std::fmt::Display,
    {
        Ok(self.file.pick(flag, key).map_err(CliError::usage)?.unwrap_or(default))
    }

    pub fn out_path(&self, flag: Option<PathBuf>) -> Option<PathBuf> {
        flag.or_else(|| self.file.raw("out").map(PathBuf::from))
    }
}

/// `LO:HI:STEP` (inclusive) or a single value.
pub fn parse_snr(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').map(str::trim).collect();
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| CliError::usage(anyhow::anyhow!("invalid SNR value '{s}' in '{spec}'")))
    };
    match parts.as_slice() {
        [one] => {
            let v = num(one)?;
            if !v.is_finite() {
                return Err(CliError::usage(anyhow::anyhow!("invalid SNR value '{spec}'")));
            }
            Ok(vec![v])
        }
        [lo, hi, step] => Ok(snr_grid_db(num(lo)?, num(hi)?, num(step)?)?),
        _ => Err(CliError::usage(anyhow::anyhow!(
            "SNR range must be LO:HI:STEP, got '{spec}'"
        ))),
    }
}

/// Scheme list from `all` or comma-separated names, in canonical order.
pub fn parse_schemes(spec: Option<&str>) -> Result<Vec<SchemeKind>, CliError> {
    let Some(spec) = spec.filter(|s| !s.trim().eq_ignore_ascii_case("all")) else {
        return Ok(SchemeKind::ALL.to_vec());
    };
    let mut picked = Vec::new();
    for name in spec.split(',') {
        picked.push(name.trim().parse::<SchemeKind>()?);
    }
    Ok(SchemeKind::ALL.into_iter().filter(|k| picked.contains(k)).collect())
}
