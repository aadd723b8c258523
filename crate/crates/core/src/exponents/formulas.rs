use num_traits::Num;

use super::ExponentKind;

/// Scalars the exponent formulas can be evaluated in (`f64` or exact rationals).
pub trait ExpScalar: Copy + PartialOrd + Num {}

impl<T: Copy + PartialOrd + Num> ExpScalar for T {}

fn two<T: ExpScalar>() -> T {
    T::one() + T::one()
}

fn min<T: ExpScalar>(a: T, b: T) -> T {
    if b < a {
        b
    } else {
        a
    }
}

fn max<T: ExpScalar>(a: T, b: T) -> T {
    if b > a {
        b
    } else {
        a
    }
}

fn pos<T: ExpScalar>(a: T) -> T {
    max(a, T::zero())
}

/// Exponent value with the name of the branch that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactExponent<T> {
    pub value: T,
    pub regime: &'static str,
    pub characterized: bool,
}

fn known<T>(value: T, regime: &'static str) -> ExactExponent<T> {
    ExactExponent {
        value,
        regime,
        characterized: true,
    }
}

/// Evaluates exponent `kind` at `(ls, lc)`. Breakpoints belong to the branch
/// with the smaller `L_s`.
pub fn exponent_exact<T: ExpScalar>(kind: ExponentKind, ls: T, lc: T) -> ExactExponent<T> {
    let one = T::one();
    match kind {
        ExponentKind::Pe => {
            if ls <= one {
                known(one, "L_s <= 1")
            } else {
                known(two::<T>() - one / ls, "L_s > 1")
            }
        }
        ExponentKind::Inf => known(min(lc, one) + min(ls, one), "min(L_c,1) + min(L_s,1)"),
        ExponentKind::Upper => {
            if ls <= one {
                known(min(one, ls + lc), "L_s <= 1")
            } else if lc >= one || ls * (one - lc) <= one {
                known(two::<T>() - one / ls, "1 < L_s <= 1/(1-L_c)+")
            } else {
                known(one + lc, "L_s > 1/(1-L_c)+")
            }
        }
        ExponentKind::Uncoded => {
            if ls + lc <= one {
                known(ls + lc, "L_s + L_c <= 1")
            } else {
                known(one, "L_s + L_c > 1")
            }
        }
        ExponentKind::Sscc => {
            if ls <= one {
                let d = one - ls;
                known(one - d * d / (lc + one - ls), "L_s <= 1")
            } else {
                known(
                    (ls * (two::<T>() * lc + one) - lc - one) / (ls * (lc + one) - one),
                    "L_s > 1",
                )
            }
        }
        ExponentKind::Jds => {
            if ls <= one {
                let d = one - ls;
                known(one - d * d / (lc + one - ls), "L_s <= 1")
            } else if ls <= one + lc {
                known(two::<T>() - one / ls, "1 < L_s <= 1 + L_c")
            } else {
                known(one + lc / (lc + one), "L_s > 1 + L_c")
            }
        }
        ExponentKind::Shda => {
            let m = min(one, lc);
            let excess = pos(ls - one);
            let regime = if ls <= one { "L_s <= 1" } else { "L_s > 1" };
            known(min(one, ls + lc) + m * excess / (excess + m), regime)
        }
        ExponentKind::Optimal => {
            if lc >= one {
                known(one + pos(one - one / ls), "L_c >= 1: HDA")
            } else if ls <= one {
                known(min(one, ls + lc), "L_c < 1, L_s <= 1: uncoded and HDA")
            } else if ls <= one + lc {
                known(one + (one - one / ls), "L_c < 1, 1 < L_s <= 1 + L_c: JDS")
            } else {
                let best = [
                    ExponentKind::Uncoded,
                    ExponentKind::Sscc,
                    ExponentKind::Jds,
                    ExponentKind::Shda,
                ]
                .into_iter()
                .map(|k| exponent_exact(k, ls, lc).value)
                .fold(T::zero(), max);
                ExactExponent {
                    value: best,
                    regime: "L_c < 1, L_s > 1 + L_c: uncharacterized",
                    characterized: false,
                }
            }
        }
    }
}

/// Exponent-optimal high-SNR parameters: rates `R = (r/2) log2(rho)`,
/// `eta^2 = rho^r_h`, and `kappa` for the partially informed bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimalParams<T> {
    pub kappa: T,
    pub r_c: T,
    pub r_s: T,
    pub r_j: T,
    /// `None` for `L_s < 1`, where the exponent is approached as `r_h -> 0-`
    /// (the digital layer vanishes and S-HDA collapses to uncoded).
    pub r_h: Option<T>,
}

pub fn optimal_params_exact<T: ExpScalar>(ls: T, lc: T) -> OptimalParams<T> {
    let one = T::one();
    let kappa = pos(ls - one) / ls;
    let (r_c, r_s) = if ls <= one {
        (lc / (one + lc - ls), T::zero())
    } else {
        let den = ls * (lc + one) - one;
        (lc * ls / den, (lc + one) * (ls - one) / den)
    };
    let r_j = if ls <= one {
        lc / (one + lc - ls)
    } else if ls <= one + lc {
        two::<T>() - one / ls
    } else {
        one + lc / (lc + one)
    };
    let r_h = if ls < one {
        None
    } else {
        Some((ls - one) / (ls - one + min(one, lc)))
    };
    OptimalParams {
        kappa,
        r_c,
        r_s,
        r_j,
        r_h,
    }
}
