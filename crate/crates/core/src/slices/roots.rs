use crate::error::{Error, Result};

/// Bisect until the bracket is no wider than `tol`; returns the final bracket.
pub fn bisect_bracket<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<(f64, f64)> {
    if tol.is_nan() || tol <= 0.0 || lo.is_nan() || hi.is_nan() || lo >= hi {
        return Err(Error::InvalidParameter(format!(
            "bisection needs lo < hi and tol > 0 (lo = {lo}, hi = {hi}, tol = {tol})"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let (mut fa, fb) = (f(a), f(b));
    for (at, v) in [(a, fa), (b, fb)] {
        if !v.is_finite() {
            return Err(Error::NonFinite { at });
        }
    }
    if fa == 0.0 {
        return Ok((a, a));
    }
    if fb == 0.0 {
        return Ok((b, b));
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if !fm.is_finite() {
            return Err(Error::NonFinite { at: m });
        }
        if fm == 0.0 {
            return Ok((m, m));
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok((a, b))
}

pub fn find_root_bisection<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64> {
    let (a, b) = bisect_bracket(f, lo, hi, tol)?;
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = find_root_bisection(|x| x * x - 2.0, 1.0, 2.0, 1e-6).unwrap();
        assert!((r - 2f64.sqrt()).abs() <= 1e-6);
        let (a, b) = bisect_bracket(|x| x * x - 2.0, 1.0, 2.0, 1e-6).unwrap();
        assert!(b - a <= 1e-6 && a <= 2f64.sqrt() && 2f64.sqrt() <= b);
    }

    #[test]
    fn failures() {
        assert!(matches!(
            find_root_bisection(|x| x * x + 1.0, 0.0, 1.0, 1e-6),
            Err(Error::NoSignChange { .. })
        ));
        assert!(matches!(
            find_root_bisection(|x| 1.0 / x, 0.0, 1.0, 1e-6),
            Err(Error::NonFinite { .. })
        ));
        assert!(find_root_bisection(|x| x, -1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn exact_zero_at_endpoint() {
        assert_eq!(
            find_root_bisection(|x| x - 1.0, 1.0, 2.0, 1e-9).unwrap(),
            1.0
        );
    }
}
