//! Bracketing scalar root finder.

use crate::error::{Error, Result};

const MAX_ITER: usize = 2000;

/// Finds `x` in `[lo, hi]` with `g(x)` within `tol` of `target`, by bisection.
///
/// `g` must be continuous and monotone on the bracket, and `g - target` must
/// change sign across it (or vanish within `tol` at an endpoint). The loop
/// stops once the residual is within `tol` and the bracket is no wider than
/// `tol * max(1, |x|)`, or when the bracket can no longer be split in `f64`.
pub fn solve_root(
    mut g: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    target: f64,
    tol: f64,
) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::InvalidParameter {
            name: "bracket",
            value: hi - lo,
            reason: "need finite lo <= hi",
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = g(a) - target;
    let fb = g(b) - target;
    if fa.abs() <= tol {
        return Ok(a);
    }
    if fb.abs() <= tol {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut mid = 0.5 * (a + b);
    for _ in 0..MAX_ITER {
        mid = a + 0.5 * (b - a);
        let fm = g(mid) - target;
        if fm.abs() <= tol && (b - a) <= tol * mid.abs().max(1.0) {
            return Ok(mid);
        }
        if mid <= a || mid >= b {
            // bracket exhausted at f64 resolution
            return Ok(mid);
        }
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(mid)
}
