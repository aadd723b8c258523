//! `jscc`: expected-distortion sweeps, exponent reports and Monte Carlo checks.

mod commands;
mod config;
mod settings;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::settings::CliError;

const ABOUT: &str = "Expected distortion of a Gaussian source over a block-fading channel \
with fading side information at the receiver";

const LONG_ABOUT: &str = "Expected distortion of a Gaussian source over a block-fading channel \
with fading side information at the receiver.

Channel and side-information power gains are unit-mean Gamma variables with shapes \
L_c and L_s, both scaled by the average SNR rho. SNR values are given in dB, \
rho_dB = 10 log10(rho).

Exit status: 0 success, 1 verification failure, 2 usage error, 3 numerical failure.";

#[derive(Debug, Parser)]
#[command(name = "jscc", version, about = ABOUT, long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Channel fading shape L_c (> 0) [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub lc: Option<f64>,
    /// Side-information fading shape L_s (> 0) [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub ls: Option<f64>,
    /// key = value configuration file; command-line flags take precedence
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Relative quadrature tolerance
    #[arg(long)]
    pub quad_rel: Option<f64>,
    /// Absolute quadrature floor
    #[arg(long)]
    pub quad_abs: Option<f64>,
    /// Root bracketing width
    #[arg(long)]
    pub root_tol: Option<f64>,
    /// Optimizer convergence width
    #[arg(long)]
    pub opt_tol: Option<f64>,
    /// Probability mass dropped from each fading-law tail (< 1e-6)
    #[arg(long)]
    pub tail_mass: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bounds and optimized scheme distortions over an SNR range, as CSV
    Sweep {
        #[command(flatten)]
        common: Common,
        /// SNR range in dB, inclusive: LO:HI:STEP or a single value [default: 0:40:5]
        #[arg(long = "snr-db", value_name = "LO:HI:STEP", allow_hyphen_values = true)]
        snr_db: Option<String>,
        /// Schemes to optimize: comma-separated uncoded, sscc, jds, hda, shda, or all
        #[arg(long, value_name = "NAME|all")]
        scheme: Option<String>,
        /// Output file (default: standard output)
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Closed-form distortion exponents, regimes and optimal parameters
    Exponent {
        #[command(flatten)]
        common: Common,
        /// Also fit empirical exponents over this SNR range in dB (LO:HI:STEP)
        #[arg(long = "snr-db", value_name = "LO:HI:STEP", allow_hyphen_values = true)]
        snr_db: Option<String>,
        /// Schemes to fit: comma-separated uncoded, sscc, jds, hda, shda, or all
        #[arg(long, value_name = "NAME|all")]
        scheme: Option<String>,
        /// Fraction of highest-SNR points used by the fit [default: 0.4]
        #[arg(long)]
        window: Option<f64>,
    },
    /// Monte Carlo estimates next to quadrature values
    Mc {
        #[command(flatten)]
        common: Common,
        /// SNR in dB, a single value or LO:HI:STEP [default: 20]
        #[arg(long = "snr-db", value_name = "DB", allow_hyphen_values = true)]
        snr_db: Option<String>,
        /// Target: uncoded, sscc, jds, hda, shda, informed, pi or all
        #[arg(long, value_name = "NAME|all")]
        scheme: Option<String>,
        /// Samples per estimate [default: 1000000]
        #[arg(long, value_name = "N")]
        samples: Option<u64>,
        /// Root seed for all random streams [default: 0]
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
    },
    /// Cross-checks and invariants at one configuration; fails with status 1
    Verify {
        #[command(flatten)]
        common: Common,
        /// SNR in dB, a single value or LO:HI:STEP [default: 20]
        #[arg(long = "snr-db", value_name = "DB", allow_hyphen_values = true)]
        snr_db: Option<String>,
        /// Samples per Monte Carlo estimate [default: 1000000]
        #[arg(long, value_name = "N")]
        samples: Option<u64>,
        /// Root seed for all random streams [default: 0]
        #[arg(long, value_name = "S")]
        seed: Option<u64>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep {
            common,
            snr_db,
            scheme,
            out,
        } => commands::sweep::run(&common, snr_db, scheme, out),
        Command::Exponent {
            common,
            snr_db,
            scheme,
            window,
        } => commands::exponent::run(&common, snr_db, scheme, window),
        Command::Mc {
            common,
            snr_db,
            scheme,
            samples,
            seed,
        } => commands::mc::run(&common, snr_db, scheme, samples, seed),
        Command::Verify {
            common,
            snr_db,
            samples,
            seed,
        } => commands::verify::run(&common, snr_db, samples, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(msg) = e.message() {
                eprintln!("error: {msg:#}");
            }
            ExitCode::from(e.code())
        }
    }
}
