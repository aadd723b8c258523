use jscc_core::bounds::{informed_ed_in, partially_informed_ed_in};
use jscc_core::exponents::regime_map;
use jscc_core::schemes::{expected_distortion_in, jds_conditional, optimize_scheme_in, sscc_conditional};
use jscc_core::{SchemeKind, SchemeParams, SystemConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::mc::{compare, DEFAULT_SAMPLES, DEFAULT_SEED, DEFAULT_SNR, TARGETS};
use crate::settings::{CliError, Settings};
use crate::Common;

const REL: f64 = 1e-9;
const CONTAINMENT_STATES: usize = 100_000;
const MAX_Z: f64 = 4.0;

struct Report {
    failed: usize,
}

impl Report {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        if !ok {
            self.failed += 1;
        }
        println!("{}  {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn le(a: f64, b: f64) -> bool {
    a <= b + REL * b.abs().max(a.abs())
}

pub fn run(common: &Common, snr_db: Option<String>, samples: Option<u64>, seed: Option<u64>) -> Result<(), CliError> {
    let s = Settings::resolve(common)?;
    let dbs = s.snr_points(snr_db, Some(DEFAULT_SNR))?;
    let samples = s.number(samples, "samples", DEFAULT_SAMPLES)?;
    let seed = s.number(seed, "seed", DEFAULT_SEED)?;
    let mut report = Report { failed: 0 };

    match s.tol.validate() {
        Ok(()) => report.record("tolerances-valid", true, format!("{:?}", s.tol)),
        Err(e) => {
            report.record("tolerances-valid", false, e.to_string());
            return Err(CliError::verify_failed());
        }
    }

    match regime_map(&[s.ls], &[s.lc]) {
        Ok(rows) => report.record(
            "exponent-regimes",
            true,
            format!("optimal {:.6} attained by {}", rows[0].optimal, rows[0].achiever),
        ),
        Err(e) => report.record("exponent-regimes", false, e.to_string()),
    }

    for db in dbs {
        println!("-- L_c = {}, L_s = {}, SNR = {db} dB", s.lc, s.ls);
        let cfg = SystemConfig::from_db(s.lc, s.ls, db, s.tol)?;
        check_point(&cfg, samples, seed, &mut report)?;
    }

    if report.failed > 0 {
        println!("{} checks failed", report.failed);
        return Err(CliError::verify_failed());
    }
    println!("all checks passed");
    Ok(())
}

fn check_point(cfg: &SystemConfig, samples: u64, seed: u64, report: &mut Report) -> Result<(), CliError> {
    let fp = cfg.fading()?;
    let inf = informed_ed_in(&fp)?;
    let pi = partially_informed_ed_in(&fp)?;
    let mut opt = Vec::new();
    for k in SchemeKind::ALL {
        opt.push((k, optimize_scheme_in(k, &fp)?));
    }
    let ed = |k: SchemeKind| opt.iter().find(|(x, _)| *x == k).map(|(_, o)| o.distortion).unwrap();

    let mut values = vec![("informed".to_string(), inf), ("pi".to_string(), pi)];
    values.extend(opt.iter().map(|(k, o)| (k.to_string(), o.distortion)));
    let out_of_range: Vec<String> = values
        .iter()
        .filter(|(_, v)| !(*v > 0.0 && *v <= 1.0))
        .map(|(n, v)| format!("{n} = {v:e}"))
        .collect();
    report.record(
        "distortion-range",
        out_of_range.is_empty(),
        if out_of_range.is_empty() {
            "all values in (0, 1]".into()
        } else {
            out_of_range.join(", ")
        },
    );

    let best = opt.iter().map(|(_, o)| o.distortion).fold(f64::INFINITY, f64::min);
    report.record(
        "bound-ordering",
        le(inf, pi) && le(pi, best),
        format!("informed {inf:.6e} <= pi {pi:.6e} <= best scheme {best:.6e}"),
    );

    let (rc, rs) = match opt.iter().find(|(k, _)| *k == SchemeKind::Sscc).map(|(_, o)| o.params) {
        Some(SchemeParams::Sscc { rc, rs }) => (rc, rs),
        _ => unreachable!("SSCC optimizer returns SSCC parameters"),
    };
    let sscc = ed(SchemeKind::Sscc);
    let jds_same_rate = expected_distortion_in(&SchemeParams::Jds { rj: rc + rs }, &fp)?;
    report.record(
        "jds-dominates-sscc",
        le(jds_same_rate, sscc) && le(ed(SchemeKind::Jds), sscc),
        format!("JDS at R = {:.4}: {jds_same_rate:.6e}, SSCC {sscc:.6e}", rc + rs),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (ch, si) = (cfg.channel_law(), cfg.side_law());
    let mut violations = 0usize;
    for _ in 0..CONTAINMENT_STATES {
        let h = cfg.rho * ch.sample(&mut rng);
        let g = cfg.rho * si.sample(&mut rng);
        if !sscc_conditional(h, g, rc, rs).in_outage && jds_conditional(h, g, rc + rs).in_outage {
            violations += 1;
        }
    }
    report.record(
        "outage-containment",
        violations == 0,
        format!("{violations} of {CONTAINMENT_STATES} sampled states decode SSCC but not JDS"),
    );

    let shda = ed(SchemeKind::Shda);
    let floor = ed(SchemeKind::Uncoded).min(ed(SchemeKind::Hda));
    report.record(
        "shda-dominates-hda-and-uncoded",
        le(shda, floor),
        format!("S-HDA {shda:.6e}, min(uncoded, HDA) {floor:.6e}"),
    );

    if cfg.ls <= 1.0 {
        let u = ed(SchemeKind::Uncoded);
        let d = (u - pi).abs();
        report.record("uncoded-meets-pi", d <= 1e-5, format!("|uncoded - pi| = {d:.3e}"));
    } else {
        println!("SKIP  uncoded-meets-pi: only applies when L_s <= 1");
    }

    let cmp = compare(cfg, &TARGETS, samples, seed)?;
    let worst = cmp.iter().max_by(|a, b| a.z().total_cmp(&b.z())).unwrap();
    for c in &cmp {
        println!(
            "      {:<10} quadrature {:.8e}  monte carlo {:.8e} +- {:.3e}",
            c.name, c.quad, c.mc, c.stderr
        );
    }
    report.record(
        "mc-agreement",
        worst.z() <= MAX_Z,
        format!("{} samples, max |z| = {:.3} ({})", samples, worst.z(), worst.name),
    );
    Ok(())
}
