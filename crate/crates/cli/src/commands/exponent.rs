use jscc_core::exponents::{empirical_exponent, exponent_formula, ExponentKind, DEFAULT_WINDOW};
use jscc_core::sweep::sweep;
use jscc_core::SchemeKind;

use crate::settings::{parse_schemes, CliError, Settings};
use crate::Common;

fn closed_kind(k: SchemeKind) -> ExponentKind {
    match k {
        SchemeKind::Uncoded => ExponentKind::Uncoded,
        SchemeKind::Sscc => ExponentKind::Sscc,
        SchemeKind::Jds => ExponentKind::Jds,
        SchemeKind::Hda | SchemeKind::Shda => ExponentKind::Shda,
    }
}

pub fn run(
    common: &Common,
    snr_db: Option<String>,
    scheme: Option<String>,
    window: Option<f64>,
) -> Result<(), CliError> {
    let s = Settings::resolve(common)?;
    let (ls, lc) = (s.ls, s.lc);
    print!("{}", table(ls, lc)?);

    let Some(spec) = s.string(snr_db, "snr_db") else {
        return Ok(());
    };
    let tol = s.validated_tol()?;
    let dbs = s.snr_points(Some(spec), None)?;
    let kinds = parse_schemes(s.string(scheme, "scheme").as_deref())?;
    let window = s.number(window, "window", DEFAULT_WINDOW)?;
    let rows = sweep(lc, ls, &dbs, &kinds, &tol)?;
    let snr: Vec<f64> = dbs.iter().map(|d| 10f64.powf(d / 10.0)).collect();

    let mut series: Vec<(String, ExponentKind, Vec<f64>)> = vec![
        (
            "inf".into(),
            ExponentKind::Inf,
            rows.iter().map(|r| r.informed).collect(),
        ),
        (
            "pi".into(),
            ExponentKind::Pe,
            rows.iter().map(|r| r.partially_informed).collect(),
        ),
    ];
    for &k in &kinds {
        let ed = rows
            .iter()
            .map(|r| r.scheme(k).map(|o| o.distortion).unwrap_or(f64::NAN))
            .collect();
        series.push((k.to_string(), closed_kind(k), ed));
    }
    println!();
    println!("empirical exponents over {} points, window {window}", dbs.len());
    println!("{:<10} {:>12} {:>12} {:>12}", "series", "fitted", "closed", "residual");
    for (name, kind, ed) in series {
        let fit = empirical_exponent(&snr, &ed, window)?;
        let closed = exponent_formula(kind, ls, lc)?.value;
        println!("{name:<10} {:>12.6} {closed:>12.6} {:>12.3e}", fit.slope, fit.residual);
    }
    Ok(())
}

/// Closed-form report for every exponent kind at `(ls, lc)`.
pub fn table(ls: f64, lc: f64) -> Result<String, CliError> {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "L_s = {ls}, L_c = {lc}");
    let _ = writeln!(out, "{:<10} {:>12}  regime", "exponent", "value");
    let mut params = None;
    let mut optimal = None;
    for kind in ExponentKind::ALL {
        let r = exponent_formula(kind, ls, lc)?;
        let value = if r.characterized {
            format!("{:.6}", r.value)
        } else {
            format!("[{:.4}, {:.4}]", r.value, r.upper.unwrap_or(f64::NAN))
        };
        let _ = writeln!(out, "{:<10} {value:>12}  {}", kind.name(), r.regime);
        params = Some(r.optimal_params);
        if kind == ExponentKind::Optimal {
            optimal = Some(r);
        }
    }
    if let Some(r) = optimal {
        let achiever = r.achiever.map(|a| a.to_string()).unwrap_or_default();
        let _ = writeln!(out, "achiever: {achiever}");
    }
    if let Some(p) = params {
        let rh = p.r_h.map(|v| format!("{v:.6}")).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "high-SNR parameters: kappa = {:.6}, r_c = {:.6}, r_s = {:.6}, r_j = {:.6}, r_h = {rh}",
            p.kappa, p.r_c, p.r_s, p.r_j
        );
    }
    Ok(out)
}
