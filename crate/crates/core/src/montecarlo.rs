//! Sampling estimates of every expectation in the crate, used to cross-check
//! the quadrature results. Samples are drawn in fixed-size chunks, each from
//! its own random stream, so the estimate depends only on the seed and not on
//! the number of worker threads.

use std::collections::HashMap;
use std::sync::{Mutex, RwLock};

use rand_distr::Distribution;
use rayon::prelude::*;

use crate::bounds::informed_conditional;
use crate::error::{Error, Result};
use crate::fading::{GainMeasure, SystemConfig};
use crate::rng::{derive_stream, op_tag};
use crate::schemes::{conditional, SchemeParams};
use crate::wyner_ziv::solve_target_k;

const CHUNK: u64 = 1 << 16;
pub const MIN_SAMPLES: u64 = 1000;

/// What to estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum McTarget {
    Scheme(SchemeParams),
    Informed,
    PartiallyInformed,
}

/// Sample mean and its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(a: Moments, b: Moments) -> Moments {
        if a.n == 0 {
            return b;
        }
        if b.n == 0 {
            return a;
        }
        let n = a.n + b.n;
        let d = b.mean - a.mean;
        Moments {
            n,
            mean: a.mean + d * b.n as f64 / n as f64,
            m2: a.m2 + b.m2 + d * d * (a.n as f64 * b.n as f64 / n as f64),
        }
    }
}

// Pairwise reduction in chunk order.
fn reduce(parts: &[Moments]) -> Moments {
    match parts.len() {
        0 => Moments::default(),
        1 => parts[0],
        n => Moments::merge(reduce(&parts[..n / 2]), reduce(&parts[n / 2..])),
    }
}

/// Estimates the expected distortion of `target` from `n_samples` independent
/// fading-state pairs.
pub fn mc_ed(target: &McTarget, cfg: &SystemConfig, n_samples: u64, seed: u64) -> Result<McEstimate> {
    if n_samples < MIN_SAMPLES {
        return Err(Error::InvalidParams(format!(
            "Monte Carlo needs at least {MIN_SAMPLES} samples, got {n_samples}"
        )));
    }
    if let McTarget::Scheme(p) = target {
        p.validate()?;
    }
    let ch_law = cfg.channel_law().sampler();
    let side_law = cfg.side_law().sampler();
    let rho = cfg.rho;
    let point = rho.to_bits() ^ cfg.lc.to_bits().rotate_left(21) ^ cfg.ls.to_bits().rotate_left(42);
    let targets = match target {
        McTarget::PartiallyInformed if cfg.ls > 1.0 => {
            Some(TargetCache::new(GainMeasure::new(cfg.side_law(), rho, &cfg.tol)?))
        }
        _ => None,
    };

    let chunks = n_samples.div_ceil(CHUNK);
    let parts: Vec<Moments> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let mut rng = derive_stream(seed, op_tag("mc_ed"), point, i);
            let count = CHUNK.min(n_samples - i * CHUNK);
            let mut m = Moments::default();
            for _ in 0..count {
                let h = rho * ch_law.sample(&mut rng);
                let g = rho * side_law.sample(&mut rng);
                let d = match target {
                    McTarget::Scheme(p) => conditional(p, h, g).distortion,
                    McTarget::Informed => informed_conditional(h, g),
                    McTarget::PartiallyInformed => {
                        let gb = targets.as_ref().map_or(0.0, |c| c.gamma_bar(h));
                        single_layer_distortion(1.0 + h, gb, g)
                    }
                };
                m.push(d);
            }
            m
        })
        .collect();

    if let Some(e) = targets.and_then(|c| c.error.into_inner().unwrap()) {
        return Err(e);
    }
    let m = reduce(&parts);
    let var = if m.n > 1 { m.m2 / (m.n - 1) as f64 } else { 0.0 };
    Ok(McEstimate {
        mean: m.mean,
        stderr: (var / m.n as f64).sqrt(),
        samples: m.n,
    })
}

// Distortion of a single-layer code with K = 2^(2R) targeting gamma_bar, at side gain g.
fn single_layer_distortion(k: f64, gamma_bar: f64, g: f64) -> f64 {
    if g < gamma_bar {
        1.0 / (1.0 + g)
    } else {
        1.0 / ((1.0 + gamma_bar) * k - gamma_bar + g)
    }
}

/// Optimal target gains `gamma_bar(h)` for `K = 1 + h`, solved on a log-spaced
/// grid of channel gains and interpolated linearly in `ln h`. The expected
/// distortion is stationary in the target, so interpolation error enters only
/// at second order.
struct TargetCache {
    side: GainMeasure,
    nodes: RwLock<HashMap<i64, f64>>,
    error: Mutex<Option<Error>>,
}

const NODES_PER_E: f64 = 64.0;

impl TargetCache {
    fn new(side: GainMeasure) -> Self {
        Self {
            side,
            nodes: RwLock::new(HashMap::new()),
            error: Mutex::new(None),
        }
    }

    fn gamma_bar(&self, h: f64) -> f64 {
        if h <= 0.0 {
            return self.node_value(i64::MIN);
        }
        let x = h.ln() * NODES_PER_E;
        let k = x.floor();
        let w = x - k;
        let lo = self.node_value(k as i64);
        let hi = self.node_value(k as i64 + 1);
        lo + w * (hi - lo)
    }

    fn node_value(&self, key: i64) -> f64 {
        if let Some(&v) = self.nodes.read().unwrap().get(&key) {
            return v;
        }
        let h = if key == i64::MIN {
            0.0
        } else {
            (key as f64 / NODES_PER_E).exp()
        };
        let v = match solve_target_k(&self.side, 1.0 + h) {
            Ok(t) => t.gamma_bar,
            Err(e) => {
                self.error.lock().unwrap().get_or_insert(e);
                0.0
            }
        };
        self.nodes.write().unwrap().insert(key, v);
        v
    }
}
