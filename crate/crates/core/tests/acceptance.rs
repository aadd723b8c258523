//! Acceptance suite. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use jscc_core::bounds::{bound_gap_report, informed_ed_in, partially_informed_ed_in};
use jscc_core::exponents::{empirical_exponent, exponent_exact, optimal_params_exact, ExponentKind};
use jscc_core::montecarlo::{mc_ed, McTarget};
use jscc_core::numerics::{integrate_adaptive, scaled_e1};
use jscc_core::schemes::{expected_distortion_in, jds_conditional, optimize_scheme_in, sscc_conditional};
use jscc_core::sweep::{snr_grid_db, sweep};
use jscc_core::wyner_ziv::ed_q_given_target;
use jscc_core::{SchemeKind, SchemeParams, SystemConfig, Tolerances};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg(lc: f64, ls: f64, rho: f64) -> SystemConfig {
    SystemConfig::new(lc, ls, rho, Tolerances::default()).unwrap()
}

fn ensure(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

/// Uncoded distortion with exponential gains written as a single integral
/// over the normalized channel gain of the E1 closed form.
fn c1_rayleigh_closed_form() -> Outcome {
    let tol = Tolerances::default();
    let mut worst: f64 = 0.0;
    for rho in [1.0, 10.0, 100.0, 1e3, 1e4] {
        let fp = cfg(1.0, 1.0, rho).fading().unwrap();
        let q = optimize_scheme_in(SchemeKind::Uncoded, &fp).unwrap().distortion;
        let closed = integrate_adaptive(
            |h0| scaled_e1((1.0 + rho * h0) / rho).unwrap() / rho * (-h0).exp(),
            0.0,
            60.0,
            &tol,
        )
        .unwrap();
        let d = (q - closed).abs();
        worst = worst.max(d);
        ensure(
            d <= 1e-6,
            format!("rho = {rho}: quadrature {q:e}, closed form {closed:e}"),
        )?;
    }
    Ok(format!("max |diff| = {worst:.2e} (tol 1e-6)"))
}

fn c2_uncoded_meets_partially_informed() -> Outcome {
    let mut worst: f64 = 0.0;
    for ls in [0.5, 1.0] {
        for lc in [0.5, 1.0, 2.0] {
            for db in snr_grid_db(0.0, 40.0, 5.0).unwrap() {
                let c = SystemConfig::from_db(lc, ls, db, Tolerances::default()).unwrap();
                let fp = c.fading().unwrap();
                let u = expected_distortion_in(&SchemeParams::Uncoded, &fp).unwrap();
                let pi = partially_informed_ed_in(&fp).unwrap();
                worst = worst.max((u - pi).abs());
                ensure(
                    (u - pi).abs() <= 1e-5,
                    format!("({ls}, {lc}, {db} dB): {u:e} vs {pi:e}"),
                )?;
                // Independent check that no positive target beats gamma_bar = 0
                // at a few channel gains.
                for h in [0.1 * c.rho, c.rho, 10.0 * c.rho] {
                    let rate = 0.5 * (1.0 + h).log2();
                    let at_zero = ed_q_given_target(&fp.side, rate, 0.0).unwrap();
                    for i in 1..=40 {
                        let gb = c.rho * 1e-3 * 1.3f64.powi(i);
                        let v = ed_q_given_target(&fp.side, rate, gb).unwrap();
                        ensure(
                            v >= at_zero - 1e-12,
                            format!("({ls}, {lc}, {db} dB, h = {h:e}): target {gb:e} beats zero"),
                        )?;
                    }
                }
            }
        }
    }
    Ok(format!("max |ED_u - ED_pi| = {worst:.2e} over 54 points (tol 1e-5)"))
}

fn c3_sscc_dominated_by_jds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut min_margin = f64::INFINITY;
    let mut states = 0u64;
    for i in 0..200 {
        let rc = rng.random_range(1e-6..=3.0);
        let rs = rng.random_range(0.0..=3.0);
        let ls = rng.random_range(0.3..=3.0);
        let lc = rng.random_range(0.3..=3.0);
        let rho = 10f64.powf(rng.random_range(0.0..=4.0));
        let c = cfg(lc, ls, rho);
        let fp = c.fading().unwrap();
        let s = expected_distortion_in(&SchemeParams::Sscc { rc, rs }, &fp).unwrap();
        let j = expected_distortion_in(&SchemeParams::Jds { rj: rc + rs }, &fp).unwrap();
        min_margin = min_margin.min(s - j);
        ensure(s >= j - 1e-9, format!("config {i}: SSCC {s:e} < JDS {j:e}"))?;
        if i % 10 == 0 {
            let ch = c.channel_law();
            let si = c.side_law();
            for _ in 0..10_000 {
                let h = rho * ch.sample(&mut rng);
                let g = rho * si.sample(&mut rng);
                let so = sscc_conditional(h, g, rc, rs);
                let jo = jds_conditional(h, g, rc + rs);
                ensure(
                    so.in_outage || !jo.in_outage,
                    format!("state ({h:e}, {g:e}) decodes SSCC but not JDS"),
                )?;
                states += 1;
            }
        }
    }
    Ok(format!(
        "200 configs, min ED_s - ED_j = {min_margin:.2e}; {states} states contained"
    ))
}

fn c4_exact_exponents() -> Outcome {
    type Q = Ratio<i64>;
    let q = |n: i64, d: i64| Q::new(n, d);
    let checks = [
        (ExponentKind::Optimal, q(1, 1), q(1, 1), q(1, 1)),
        (ExponentKind::Inf, q(1, 1), q(1, 1), q(2, 1)),
        (ExponentKind::Optimal, q(2, 1), q(1, 1), q(3, 2)),
        (ExponentKind::Sscc, q(2, 1), q(1, 1), q(4, 3)),
        (ExponentKind::Uncoded, q(2, 1), q(1, 1), q(1, 1)),
        (ExponentKind::Optimal, q(3, 2), q(1, 2), q(4, 3)),
        (ExponentKind::Shda, q(3, 2), q(1, 2), q(5, 4)),
    ];
    for (kind, ls, lc, want) in checks {
        let got = exponent_exact(kind, ls, lc).value;
        ensure(got == want, format!("{kind}({ls}, {lc}) = {got}, expected {want}"))?;
    }
    Ok("7 exact rational values".into())
}

fn c5_empirical_exponents() -> Outcome {
    let tol = Tolerances::default();
    let dbs = snr_grid_db(40.0, 70.0, 2.5).unwrap();
    let snr: Vec<f64> = dbs.iter().map(|d| 10f64.powf(d / 10.0)).collect();
    let mut notes = Vec::new();
    for (kind, ls, lc, want) in [
        (SchemeKind::Uncoded, 1.0, 1.0, 1.0),
        (SchemeKind::Jds, 1.5, 0.5, 4.0 / 3.0),
        (SchemeKind::Hda, 2.0, 1.0, 1.5),
    ] {
        let rows = sweep(lc, ls, &dbs, &[kind], &tol).unwrap();
        let ed: Vec<f64> = rows.iter().map(|r| r.scheme(kind).unwrap().distortion).collect();
        let fit = empirical_exponent(&snr, &ed, 1.0).unwrap();
        notes.push(format!("{kind} {:.4} (want {want:.4})", fit.slope));
        ensure(
            (fit.slope - want).abs() <= 0.1,
            format!("{kind} at ({ls}, {lc}): slope {}", fit.slope),
        )?;
    }
    Ok(notes.join(", "))
}

fn c6_jds_shda_crossover() -> Outcome {
    let dbs = snr_grid_db(30.0, 45.0, 0.5).unwrap();
    let rows = sweep(
        0.5,
        1.5,
        &dbs,
        &[SchemeKind::Jds, SchemeKind::Shda],
        &Tolerances::default(),
    )
    .unwrap();
    let diff: Vec<f64> = rows
        .iter()
        .map(|r| (r.jds.unwrap().distortion / r.shda.unwrap().distortion).ln())
        .collect();
    ensure(diff[0] > 0.0, format!("JDS already below S-HDA at {} dB", dbs[0]))?;
    let k = diff
        .iter()
        .position(|&d| d < 0.0)
        .ok_or_else(|| "JDS never drops below S-HDA up to 45 dB".to_string())?;
    ensure(
        diff[k..].iter().all(|&d| d < 0.0),
        "JDS and S-HDA cross more than once".into(),
    )?;
    let x = dbs[k - 1] + (dbs[k] - dbs[k - 1]) * diff[k - 1] / (diff[k - 1] - diff[k]);
    ensure((30.0..=45.0).contains(&x), format!("crossover at {x:.2} dB"))?;
    Ok(format!("crossover at {x:.2} dB"))
}

fn c7_bound_gap() -> Outcome {
    let rows = bound_gap_report(1.0, 10.0, &[1.0, 2.0, 5.0, 20.0, 100.0], &Tolerances::default()).unwrap();
    for w in rows.windows(2) {
        ensure(
            w[1].gap <= w[0].gap,
            format!("gap grows from L_s={} to L_s={}", w[0].ls, w[1].ls),
        )?;
    }
    for r in &rows {
        ensure(
            r.gap >= 0.0 && r.gap <= r.gap_bound,
            format!("L_s={}: gap {}", r.ls, r.gap),
        )?;
    }
    let gaps: Vec<String> = rows.iter().map(|r| format!("{:.3e}", r.gap)).collect();
    Ok(format!("gaps [{}] nonincreasing and within bound", gaps.join(", ")))
}

fn c8_monte_carlo() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let lc = rng.random_range(0.3..3.0);
        let ls = rng.random_range(0.3..3.0);
        let rho = 10f64.powf(rng.random_range(0.0..3.0));
        let c = cfg(lc, ls, rho);
        let fp = c.fading().unwrap();
        let mut targets: Vec<(String, McTarget, f64)> = vec![
            ("informed".into(), McTarget::Informed, informed_ed_in(&fp).unwrap()),
            (
                "partially-informed".into(),
                McTarget::PartiallyInformed,
                partially_informed_ed_in(&fp).unwrap(),
            ),
        ];
        for k in SchemeKind::ALL {
            let o = optimize_scheme_in(k, &fp).unwrap();
            targets.push((k.to_string(), McTarget::Scheme(o.params), o.distortion));
        }
        for (name, t, q) in targets {
            let e = mc_ed(&t, &c, 10_000_000, 1000 + i).unwrap();
            let z = (e.mean - q).abs() / e.stderr;
            worst = worst.max(z);
            ensure(
                z <= 4.0,
                format!(
                    "{name} at ({lc:.3}, {ls:.3}, {rho:.3}): quad {q:e}, MC {:e} +- {:e}",
                    e.mean, e.stderr
                ),
            )?;
        }
    }
    Ok(format!("21 comparisons, max |z| = {worst:.2} (tol 4)"))
}

// Brute-force evaluation of the high-SNR infimum problems with gains
// h = rho^(1-alpha), gamma = rho^(1-beta) and rate function L * alpha.
fn grid_infimum(lc: f64, ls: f64, objective: impl Fn(f64, f64) -> f64) -> f64 {
    const N: usize = 2000;
    const A_MAX: f64 = 2.1;
    const B_MAX: f64 = 1.05;
    let mut best = f64::INFINITY;
    for i in 0..N {
        let a = A_MAX * i as f64 / (N - 1) as f64;
        for j in 0..N {
            let b = B_MAX * j as f64 / (N - 1) as f64;
            let v = objective(a, b) + lc * a + ls * b;
            if v < best {
                best = v;
            }
        }
    }
    best
}

fn pos(x: f64) -> f64 {
    x.max(0.0)
}

fn brute_jds(ls: f64, lc: f64) -> f64 {
    let rj = optimal_params_exact(ls, lc).r_j;
    grid_infimum(lc, ls, |a, b| {
        let outage = pos(rj - pos(1.0 - b)) >= pos(1.0 - a);
        if outage {
            pos(1.0 - b)
        } else {
            rj.max(pos(1.0 - b))
        }
    })
}

fn brute_shda(ls: f64, lc: f64) -> f64 {
    // Below L_s = 1 the optimum is approached with a vanishing digital layer.
    let rh = optimal_params_exact(ls, lc).r_h.unwrap_or(-1e-4);
    grid_infimum(lc, ls, |a, b| {
        let outage = pos(1.0 - b) - pos(a - 1.0) <= rh;
        if outage {
            pos(1.0 - b)
        } else {
            pos(1.0 - b).max(pos(1.0 - a) + rh)
        }
    })
}

fn c9_infimum_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let configs: Vec<(f64, f64)> = (0..20)
        .map(|_| (rng.random_range(0.3..2.0), rng.random_range(0.3..2.0)))
        .collect();
    let mut worst: f64 = 0.0;
    for (ls, lc) in configs {
        let j = exponent_exact(ExponentKind::Jds, ls, lc).value;
        let s = exponent_exact(ExponentKind::Shda, ls, lc).value;
        let bj = brute_jds(ls, lc);
        let bs = brute_shda(ls, lc);
        worst = worst.max((bj - j).abs()).max((bs - s).abs());
        ensure(
            (bj - j).abs() <= 5e-3,
            format!("JDS at ({ls:.4}, {lc:.4}): closed {j}, grid {bj}"),
        )?;
        ensure(
            (bs - s).abs() <= 5e-3,
            format!("S-HDA at ({ls:.4}, {lc:.4}): closed {s}, grid {bs}"),
        )?;
    }
    Ok(format!("20 shape pairs, max deviation {worst:.2e} (tol 5e-3)"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 Rayleigh closed form", c1_rayleigh_closed_form),
        (
            "2 uncoded meets partially informed bound",
            c2_uncoded_meets_partially_informed,
        ),
        ("3 SSCC dominated by JDS", c3_sscc_dominated_by_jds),
        ("4 exact exponent values", c4_exact_exponents),
        ("5 empirical exponents", c5_empirical_exponents),
        ("6 JDS/S-HDA crossover", c6_jds_shda_crossover),
        ("7 bound gap convergence", c7_bound_gap),
        ("8 Monte Carlo agreement", c8_monte_carlo),
        ("9 exponent infimum validation", c9_infimum_validation),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 9 acceptance criteria passed");
}
