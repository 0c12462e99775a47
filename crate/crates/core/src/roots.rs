//! Sign-change scanning and bisection on extended-precision functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::real::{Precision, Real};

/// An interval on which a function changes sign (or a grid point where it
/// vanishes exactly, in which case `lo == hi`).
#[derive(Debug, Clone)]
pub struct Bracket {
    pub lo: Real,
    pub hi: Real,
    lo_sign: i32,
}

/// Bisection stops once the bracket is narrower than `10^(6 - digits)`.
pub fn zero_tolerance(prec: Precision) -> Real {
    Real::pow10(6 - prec.digits() as i64, prec)
}

/// Walks the grid `step, 2·step, … ≤ end` and returns up to `max` brackets
/// in increasing order.
pub fn scan_sign_changes<F>(
    mut f: F,
    step: &BigRational,
    end: &BigRational,
    max: usize,
    prec: Precision,
) -> Result<Vec<Bracket>>
where
    F: FnMut(&Real) -> Result<Real>,
{
    if step <= &BigRational::zero() {
        return Err(Error::InvalidArgument("scan step must be positive".into()));
    }
    let mut out = Vec::new();
    let mut prev: Option<(Real, i32)> = None;
    let mut k = BigInt::one();
    loop {
        let xr = step * BigRational::from_integer(k.clone());
        if &xr > end || out.len() >= max {
            break;
        }
        let x = Real::from_ratio(&xr, prec);
        let s = f(&x)?.signum();
        if s == 0 {
            out.push(Bracket { lo: x.clone(), hi: x.clone(), lo_sign: 0 });
            prev = None;
        } else {
            if let Some((px, ps)) = &prev {
                if *ps != s {
                    out.push(Bracket { lo: px.clone(), hi: x.clone(), lo_sign: *ps });
                }
            }
            prev = Some((x, s));
        }
        k += 1;
    }
    Ok(out)
}

/// Bisects a bracket down to width `tol`; returns the midpoint.
pub fn bisect<F>(mut f: F, bracket: &Bracket, tol: &Real, prec: Precision) -> Result<Real>
where
    F: FnMut(&Real) -> Result<Real>,
{
    if bracket.lo_sign == 0 {
        return Ok(bracket.lo.clone());
    }
    let mut lo = bracket.lo.with_precision(prec);
    let mut hi = bracket.hi.with_precision(prec);
    let lo_sign = bracket.lo_sign;
    // 2^-1000 is far below any supported tolerance
    for _ in 0..1000 {
        if (&hi - &lo) <= *tol {
            break;
        }
        let mid = (&lo + &hi).div_i64(2);
        let s = f(&mid)?.signum();
        if s == 0 {
            return Ok(mid);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi).div_i64(2))
}
