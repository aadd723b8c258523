use rayon::prelude::*;

/// Spacing of the coarse grid along one search axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisScale {
    Linear,
    Log,
}

/// One coordinate of the search box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub scale: AxisScale,
}

impl Axis {
    pub fn linear(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            scale: AxisScale::Linear,
        }
    }

    /// Log-spaced axis; both ends must be positive.
    pub fn log(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            scale: AxisScale::Log,
        }
    }

    fn to_param(self, z: f64) -> f64 {
        match self.scale {
            AxisScale::Linear => self.lo + z * (self.hi - self.lo),
            AxisScale::Log => (self.lo.ln() + z * (self.hi.ln() - self.lo.ln())).exp(),
        }
        .clamp(self.lo, self.hi)
    }

    fn to_unit(self, x: f64) -> f64 {
        let z = match self.scale {
            AxisScale::Linear => (x - self.lo) / (self.hi - self.lo),
            AxisScale::Log => (x.ln() - self.lo.ln()) / (self.hi.ln() - self.lo.ln()),
        };
        if z.is_finite() {
            z.clamp(0.0, 1.0)
        } else {
            0.0
        }
    }

    /// Width of the axis in the coordinate that `opt_tol` is measured in:
    /// parameter units for linear axes, log units for log axes.
    fn span(self) -> f64 {
        match self.scale {
            AxisScale::Linear => self.hi - self.lo,
            AxisScale::Log => self.hi.ln() - self.lo.ln(),
        }
    }
}

/// Settings for [`minimize_box_with`].
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOptions {
    /// Coarse grid points per axis (at least 17).
    pub grid: usize,
    /// Number of best grid points refined by pattern search.
    pub starts: usize,
    /// Convergence width of the pattern search.
    pub tol: f64,
    /// Extra starting points in parameter coordinates, evaluated with the grid.
    pub seeds: Vec<Vec<f64>>,
}

impl SearchOptions {
    pub fn new(tol: f64) -> Self {
        Self {
            grid: 17,
            starts: 3,
            tol,
            seeds: Vec::new(),
        }
    }

    pub fn grid(mut self, n: usize) -> Self {
        self.grid = n.max(17);
        self
    }

    pub fn starts(mut self, n: usize) -> Self {
        self.starts = n.max(1);
        self
    }

    pub fn seed(mut self, point: Vec<f64>) -> Self {
        self.seeds.push(point);
        self
    }
}

/// Best point found by the box minimizer.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxMin {
    pub argmin: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
}

/// Minimizes `f` over the box with default search settings.
pub fn minimize_box<F>(f: F, axes: &[Axis], tol: f64) -> BoxMin
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    minimize_box_with(f, axes, &SearchOptions::new(tol))
}

/// Multistart grid search followed by compass/pattern refinement from the best
/// few grid points. Never returns a value worse than the best grid point.
pub fn minimize_box_with<F>(f: F, axes: &[Axis], opts: &SearchOptions) -> BoxMin
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    assert!(!axes.is_empty() && axes.len() <= 2, "1 or 2 search axes supported");
    let dim = axes.len();
    let n = opts.grid.max(17);
    let eval = |z: &[f64]| -> f64 {
        let x: Vec<f64> = z.iter().zip(axes).map(|(&zi, ax)| ax.to_param(zi)).collect();
        let v = f(&x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut candidates: Vec<Vec<f64>> = Vec::new();
    let unit = |i: usize| i as f64 / (n - 1) as f64;
    if dim == 1 {
        candidates.extend((0..n).map(|i| vec![unit(i)]));
    } else {
        for i in 0..n {
            for j in 0..n {
                candidates.push(vec![unit(i), unit(j)]);
            }
        }
    }
    for s in &opts.seeds {
        if s.len() == dim {
            candidates.push(s.iter().zip(axes).map(|(&x, ax)| ax.to_unit(x)).collect());
        }
    }
    let values: Vec<f64> = candidates.par_iter().map(|z| eval(z)).collect();
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));

    let mut starts: Vec<usize> = Vec::new();
    for &i in &order {
        if starts.len() >= opts.starts {
            break;
        }
        if starts.iter().all(|&k| candidates[k] != candidates[i]) {
            starts.push(i);
        }
    }

    let tol_unit: Vec<f64> = axes
        .iter()
        .map(|ax| (opts.tol / ax.span().abs().max(f64::MIN_POSITIVE)).max(1e-15))
        .collect();
    let step0 = 1.0 / (n - 1) as f64;
    let refined: Vec<(Vec<f64>, f64, usize)> = starts
        .par_iter()
        .map(|&k| pattern_search(&eval, candidates[k].clone(), values[k], step0, &tol_unit))
        .collect();

    let mut best_z = candidates[order[0]].clone();
    let mut best_v = values[order[0]];
    let mut evaluations = candidates.len();
    for (z, v, used) in refined {
        evaluations += used;
        if v < best_v {
            best_v = v;
            best_z = z;
        }
    }
    BoxMin {
        argmin: best_z.iter().zip(axes).map(|(&z, ax)| ax.to_param(z)).collect(),
        value: best_v,
        evaluations,
    }
}

fn pattern_search<E: Fn(&[f64]) -> f64>(
    eval: &E,
    mut z: Vec<f64>,
    mut fz: f64,
    step0: f64,
    tol_unit: &[f64],
) -> (Vec<f64>, f64, usize) {
    const MAX_EVALS: usize = 4000;
    let dim = z.len();
    let directions: Vec<Vec<f64>> = if dim == 1 {
        vec![vec![1.0], vec![-1.0]]
    } else {
        vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
            vec![1.0, 1.0],
            vec![-1.0, -1.0],
            vec![1.0, -1.0],
            vec![-1.0, 1.0],
        ]
    };
    let mut step = vec![step0; dim];
    let mut used = 0;
    while used < MAX_EVALS {
        let mut moved = false;
        for d in &directions {
            let cand: Vec<f64> = (0..dim).map(|k| (z[k] + d[k] * step[k]).clamp(0.0, 1.0)).collect();
            if cand == z {
                continue;
            }
            let fc = eval(&cand);
            used += 1;
            if fc < fz {
                z = cand;
                fz = fc;
                moved = true;
                break;
            }
        }
        if !moved {
            if step.iter().zip(tol_unit).all(|(s, t)| s <= t) {
                break;
            }
            for (s, t) in step.iter_mut().zip(tol_unit) {
                *s = (*s * 0.5).max(0.5 * t);
            }
        }
    }
    (z, fz, used)
}
