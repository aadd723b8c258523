use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::Tolerances;
use crate::error::{domain, Error, Result};

// Gauss-Kronrod 10/21 nodes and weights on [-1, 1]. Odd indices are the Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_846_864_542,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

const MAX_SEGMENTS: usize = 4000;

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_g = 0.0;
    let mut res_k = WGK[10] * fc;
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        let sum = f1 + f2;
        res_k += WGK[j] * sum;
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * sum;
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let width = half.abs();
    res_abs *= width;
    res_asc *= width;
    let mut error = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Segment {
        a,
        b,
        value: res_k * half,
        error,
        abs_value: res_abs,
    }
}

/// Adaptive Gauss-Kronrod integration of `f` over `[a, b]`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: &Tolerances) -> Result<f64> {
    integrate_with_breaks(f, &[a, b], tol).map(|r| r.value)
}

/// Integrates over `[a, b]` where `f` behaves like `(x - a)^(order - 1)` near
/// `a`. The substitution `x = a + u^(1/order)` removes the singularity.
pub fn integrate_singular_left<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, order: f64, tol: &Tolerances) -> Result<f64> {
    if !(order > 0.0 && order.is_finite()) {
        return Err(domain(format!("singularity order must be positive, got {order}")));
    }
    if !(a < b) {
        return check_interval(a, b).map(|_| 0.0);
    }
    let inv = 1.0 / order;
    let u_max = (b - a).powf(order);
    let g = |u: f64| {
        if u <= 0.0 {
            return 0.0;
        }
        f(a + u.powf(inv)) * inv * u.powf(inv - 1.0)
    };
    integrate_with_breaks(g, &[0.0, u_max], tol).map(|r| r.value)
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain(format!("integration limits must be finite, got [{a}, {b}]")));
    }
    if a > b {
        return Err(domain(format!("integration limits out of order: [{a}, {b}]")));
    }
    Ok(())
}

/// Integrates over `[points[0], points[last]]`, starting the subdivision from
/// the supplied interior break points. Points must be nondecreasing.
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: &Tolerances) -> Result<Integral> {
    if points.len() < 2 {
        return Err(domain("integration needs at least two points"));
    }
    for w in points.windows(2) {
        check_interval(w[0], w[1])?;
    }
    let a = points[0];
    let b = points[points.len() - 1];

    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    let mut evaluations = 0;
    for w in points.windows(2) {
        if w[1] > w[0] {
            heap.push(gauss_kronrod(&f, w[0], w[1]));
            evaluations += 21;
        }
    }
    if heap.is_empty() {
        return Ok(Integral {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        });
    }

    loop {
        let (value, error, abs_value) = totals(heap.iter().chain(frozen.iter()));
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::Quadrature {
                a,
                b,
                estimate: value,
                error,
            });
        }
        let target = tol.quad_abs.max(tol.quad_rel * value.abs());
        let roundoff = 100.0 * f64::EPSILON * abs_value;
        if error <= target || error <= roundoff {
            return Ok(Integral {
                value,
                error,
                evaluations,
            });
        }
        if heap.len() + frozen.len() >= MAX_SEGMENTS {
            return Err(Error::Quadrature {
                a,
                b,
                estimate: value,
                error,
            });
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::Quadrature {
                a,
                b,
                estimate: value,
                error,
            });
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b)
            || (worst.b - worst.a) <= 64.0 * f64::EPSILON * worst.a.abs().max(worst.b.abs())
        {
            frozen.push(worst);
            continue;
        }
        heap.push(gauss_kronrod(&f, worst.a, mid));
        heap.push(gauss_kronrod(&f, mid, worst.b));
        evaluations += 42;
    }
}

fn totals<'a>(segments: impl Iterator<Item = &'a Segment>) -> (f64, f64, f64) {
    let mut segs: Vec<&Segment> = segments.collect();
    // Summation in position order keeps the result independent of heap layout.
    segs.sort_by(|x, y| x.a.total_cmp(&y.a));
    segs.iter().fold((0.0, 0.0, 0.0), |(v, e, s), seg| {
        (v + seg.value, e + seg.error, s + seg.abs_value)
    })
}
