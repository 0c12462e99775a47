//! Reference values of the Bessel functions of the first kind.
//!
//! Everything here is computed from the defining power series
//! `J_p(x) = Σ_k (-1)^k (x/2)^(p+2k) / (k! (k+p)!)` in extended precision,
//! independently of the trigonometric formulas the rest of the crate builds.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::{Precision, Real};
use crate::roots;

/// Largest |x| accepted by [`bessel_j`].
pub const MAX_ARGUMENT: i64 = 60;

/// Largest power accepted by [`bessel_taylor_coeff`].
pub const MAX_TAYLOR_POWER: u32 = 200;

const MAX_TERMS: u64 = 10_000;

/// Order `p` of `J_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BesselOrder(pub u32);

impl BesselOrder {
    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `J_p(x)` with relative error below `10^(1 - digits)` away from zeros of
/// `J_p`. Terms are summed until the next one drops below
/// `10^(-digits-5)` of the partial sum; past the peak term the series is
/// alternating and decreasing, so that term also bounds the tail.
pub fn bessel_j(order: BesselOrder, x: &Real, prec: Precision) -> Result<Real> {
    if !x.is_finite() {
        return Err(Error::Domain("argument is not finite".into()));
    }
    let limit = Real::from_i64(MAX_ARGUMENT, prec);
    if x.abs() > limit {
        return Err(Error::Domain(format!(
            "|x| = {} exceeds the series range |x| <= {MAX_ARGUMENT}",
            x.to_sci_string(6)
        )));
    }
    let p = order.get();
    if x.is_zero() {
        return Ok(if p == 0 { Real::one(prec) } else { Real::zero(prec) });
    }

    // the largest term is about e^|x|; carry enough digits to absorb the
    // cancellation on top of the requested ones
    let magnitude_digits = (x.abs().to_f64() * std::f64::consts::LOG10_E).ceil() as u32;
    let work = prec.with_extra_digits(magnitude_digits + 10);
    let half = x.with_precision(work).div_i64(2);
    let half_sq = &half * &half;
    let peak = half.abs().to_f64();

    let mut term = half.powi(p) / Real::from_bigint(&factorial(p), work);
    let mut sum = Real::zero(work);
    let rel_stop = Real::pow10(-(prec.digits() as i64) - 5, work);
    let abs_floor = Real::pow10(-(work.digits() as i64), work);
    let mut largest = term.abs();

    for k in 0..MAX_TERMS {
        sum = &sum + &term;
        let k1 = k as i64 + 1;
        term = -(&term * &half_sq) / Real::from_i64(k1 * (k1 + p as i64), work);
        let mag = term.abs();
        if mag > largest {
            largest = mag.clone();
        }
        let past_peak = (k1 as f64) > peak;
        if past_peak && (mag < &rel_stop * &sum.abs() || mag < &abs_floor * &largest) {
            // alternating tail: |remainder| <= |next term|
            let out = sum.with_precision(prec);
            if !out.is_finite() {
                return Err(Error::Precision(format!("J_{p} evaluation produced a non-finite value")));
            }
            return Ok(out);
        }
    }
    Err(Error::Precision(format!(
        "J_{p} series did not converge within {MAX_TERMS} terms"
    )))
}

/// Exact coefficient of `x^power` in the Maclaurin series of `J_p`.
pub fn bessel_taylor_coeff(order: BesselOrder, power: u32) -> Result<BigRational> {
    if power > MAX_TAYLOR_POWER {
        return Err(Error::InvalidArgument(format!(
            "power {power} exceeds {MAX_TAYLOR_POWER}"
        )));
    }
    let p = order.get();
    if power < p || (power - p) % 2 == 1 {
        return Ok(BigRational::zero());
    }
    let k = (power - p) / 2;
    let den = BigInt::from(2u32).pow(p + 2 * k) * factorial(k) * factorial(k + p);
    let num = if k.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    Ok(BigRational::new(num, den))
}

/// The `index`-th positive zero `j_{p,index}` of `J_p`, located by a sign
/// scan on a 0.05 grid followed by bisection to `10^(6 - digits)`.
pub fn bessel_zero(order: BesselOrder, index: u32, prec: Precision) -> Result<Real> {
    if index == 0 {
        return Err(Error::InvalidArgument("zero index starts at 1".into()));
    }
    let f = |x: &Real| bessel_j(order, x, prec);
    let step = BigRational::new(BigInt::from(1), BigInt::from(20));
    let end = BigRational::from_integer(BigInt::from(MAX_ARGUMENT));
    let brackets = roots::scan_sign_changes(f, &step, &end, index as usize, prec)?;
    let bracket = brackets.get(index as usize - 1).ok_or_else(|| {
        Error::NoSignChange(format!("J_{order} has fewer than {index} zeros below {MAX_ARGUMENT}"))
    })?;
    roots::bisect(f, bracket, &roots::zero_tolerance(prec), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn p50() -> Precision {
        Precision::default()
    }

    fn real(s: &str) -> Real {
        Real::parse_decimal(s, p50()).unwrap()
    }

    #[test]
    fn values_at_origin() {
        assert_eq!(bessel_j(BesselOrder(0), &real("0"), p50()).unwrap().to_f64(), 1.0);
        assert!(bessel_j(BesselOrder(3), &real("0"), p50()).unwrap().is_zero());
    }

    #[test]
    fn known_values() {
        // J0(3) = -0.26005195490193343762...
        let j = bessel_j(BesselOrder(0), &real("3"), p50()).unwrap();
        assert_eq!(j.to_sci_string(20), "-2.6005195490193343762e-1");
        // J1(1) = 0.44005058574493351596...
        let j = bessel_j(BesselOrder(1), &real("1"), p50()).unwrap();
        assert_eq!(j.to_sci_string(20), "4.4005058574493351596e-1");
    }

    #[test]
    fn near_first_zero_of_j0() {
        let j = bessel_j(BesselOrder(0), &real("2.4048255577"), p50()).unwrap();
        assert!(j.abs().to_f64() < 1e-9);
    }

    #[test]
    fn rejects_large_arguments() {
        assert!(matches!(
            bessel_j(BesselOrder(0), &real("60.5"), p50()),
            Err(Error::Domain(_))
        ));
        assert!(bessel_j(BesselOrder(0), &real("-60"), p50()).is_ok());
    }

    #[test]
    fn parity_in_x() {
        let a = bessel_j(BesselOrder(3), &real("2.5"), p50()).unwrap();
        let b = bessel_j(BesselOrder(3), &real("-2.5"), p50()).unwrap();
        assert!((a + b).abs() < p50().epsilon());
    }

    #[test]
    fn large_argument_keeps_digits() {
        // J0(50) = 0.055812327669251815005...
        let j = bessel_j(BesselOrder(0), &real("50"), p50()).unwrap();
        assert_eq!(j.to_sci_string(18), "5.58123276692518150e-2");
    }

    #[test]
    fn taylor_coefficients() {
        let c = |p, n| bessel_taylor_coeff(BesselOrder(p), n).unwrap();
        assert_eq!(c(0, 0), BigRational::one());
        assert_eq!(c(0, 2), BigRational::new((-1).into(), 4.into()));
        assert_eq!(c(0, 3), BigRational::zero());
        assert_eq!(c(5, 3), BigRational::zero());
        let expected = BigRational::new(
            1.into(),
            BigInt::from(4096u32) * BigInt::from(479_001_600u64),
        );
        assert_eq!(c(12, 12), expected);
        assert!(bessel_taylor_coeff(BesselOrder(0), 201).is_err());
    }

    #[test]
    fn first_zero_of_j0() {
        let z = bessel_zero(BesselOrder(0), 1, p50()).unwrap();
        assert_eq!(z.to_sci_string(30), "2.40482555769577276862163187933e0");
        let z2 = bessel_zero(BesselOrder(2), 1, Precision::new(20).unwrap()).unwrap();
        assert!((z2.to_f64() - 5.135622301840683).abs() < 1e-12);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0).to_u64(), Some(1));
        assert_eq!(factorial(12).to_u64(), Some(479_001_600));
    }
}
