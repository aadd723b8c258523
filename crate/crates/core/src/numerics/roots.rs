use crate::error::{Error, Result};

/// Bisection on a sign-changing bracket, stopping once the bracket is narrower
/// than `tol`. An exact zero at either end is returned as is.
pub fn find_root_bisect<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let f_lo = f(lo);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = f(hi);
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo * f_hi < 0.0) {
        return Err(Error::NoBracket { lo, hi, f_lo, f_hi });
    }
    let lo_negative = f_lo < 0.0;
    for _ in 0..400 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = find_root_bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-12).unwrap();
        assert!((r - 2f64.sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn symmetric_bracket() {
        let r = find_root_bisect(|x| x, -1.0, 1.0, 1e-12).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn zero_at_lower_end_returns_lo() {
        let r = find_root_bisect(|x| x - 0.25, 0.25, 3.0, 1e-12).unwrap();
        assert_eq!(r, 0.25);
    }

    #[test]
    fn decreasing_function() {
        let r = find_root_bisect(|x| 1.0 - x.exp(), -2.0, 5.0, 1e-13).unwrap();
        assert!(r.abs() <= 1e-13);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        let e = find_root_bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(e, Error::NoBracket { .. }));
    }
}
