use std::io::Write;
use std::path::PathBuf;

use jscc_core::sweep::{sweep, SweepRow};
use jscc_core::SchemeParams;

use super::sci;
use crate::settings::{parse_schemes, CliError, Settings};
use crate::Common;

pub const DEFAULT_SNR_RANGE: &str = "0:40:5";

pub const HEADER: &str =
    "snr_db,ed_inf,ed_pi,ed_uncoded,ed_sscc,ed_jds,ed_hda,ed_shda,rc_opt,rs_opt,rj_opt,pd_opt,eta2_opt";

pub fn run(
    common: &Common,
    snr_db: Option<String>,
    scheme: Option<String>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let s = Settings::resolve(common)?;
    let tol = s.validated_tol()?;
    let snr = s.snr_points(snr_db, Some(DEFAULT_SNR_RANGE))?;
    let kinds = parse_schemes(s.string(scheme, "scheme").as_deref())?;
    let rows = sweep(s.lc, s.ls, &snr, &kinds, &tol)?;
    let text = render(&rows);
    match s.out_path(out) {
        Some(path) => std::fs::write(&path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn render(rows: &[SweepRow]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in rows {
        let ed = |o: Option<jscc_core::Optimized>| o.map(|o| sci(o.distortion)).unwrap_or_default();
        let (mut rc, mut rs, mut rj, mut pd, mut eta2) = Default::default();
        if let Some(o) = r.sscc {
            if let SchemeParams::Sscc { rc: a, rs: b } = o.params {
                (rc, rs) = (sci(a), sci(b));
            }
        }
        if let Some(o) = r.jds {
            if let SchemeParams::Jds { rj: a } = o.params {
                rj = sci(a);
            }
        }
        if let Some(o) = r.shda {
            if let SchemeParams::Shda { pd: a, eta } = o.params {
                (pd, eta2) = (sci(a), sci(eta * eta));
            }
        }
        let cells = [
            sci(r.snr_db),
            sci(r.informed),
            sci(r.partially_informed),
            ed(r.uncoded),
            ed(r.sscc),
            ed(r.jds),
            ed(r.hda),
            ed(r.shda),
            rc,
            rs,
            rj,
            pd,
            eta2,
        ];
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
