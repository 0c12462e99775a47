//! Extended-precision reals.
//!
//! [`Real`] wraps an `astro_float::BigFloat` and carries its own binary
//! precision. Binary operations run at the larger of the two operand
//! precisions, so a value built at 50 digits stays at 50 digits through a
//! computation regardless of the literals mixed into it.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra bits carried beyond the requested decimal digits.
const GUARD_BITS: usize = 32;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("failed to allocate astro-float constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub const MIN_DIGITS: u32 = 16;
    pub const DEFAULT_DIGITS: u32 = 50;
    /// Beyond this the series evaluations become impractically slow.
    pub const MAX_DIGITS: u32 = 5000;

    pub fn new(digits: u32) -> Result<Self> {
        if digits < Self::MIN_DIGITS {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least {} decimal digits, got {digits}",
                Self::MIN_DIGITS
            )));
        }
        if digits > Self::MAX_DIGITS {
            return Err(Error::Precision(format!(
                "{digits} decimal digits exceeds the supported maximum of {}",
                Self::MAX_DIGITS
            )));
        }
        Ok(Self { digits })
    }

    /// The 16-digit fast path used by coarse sweeps.
    pub fn fast() -> Self {
        Self { digits: Self::MIN_DIGITS }
    }

    pub fn digits(self) -> u32 {
        self.digits
    }

    /// Mantissa bits used for values at this precision, guard bits included.
    pub fn bits(self) -> usize {
        digits_to_bits(self.digits) + GUARD_BITS
    }

    /// A precision with `extra` more digits. Not range checked: internal use
    /// for guard digits only.
    pub fn with_extra_digits(self, extra: u32) -> Self {
        Self { digits: self.digits + extra }
    }

    /// `10^-digits` as a [`Real`] at this precision.
    pub fn epsilon(self) -> Real {
        Real::pow10(-(self.digits as i64), self)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self { digits: Self::DEFAULT_DIGITS }
    }
}

impl TryFrom<u32> for Precision {
    type Error = Error;

    fn try_from(digits: u32) -> Result<Self> {
        Self::new(digits)
    }
}

impl From<Precision> for u32 {
    fn from(p: Precision) -> u32 {
        p.digits
    }
}

fn digits_to_bits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize
}

/// An extended-precision real number.
#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    // astro-float reports zero precision for zero values, so keep our own
    bits: usize,
}

impl Real {
    fn wrap(v: BigFloat, bits: usize) -> Self {
        Self { v, bits }
    }

    /// Mantissa length in bits.
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn zero(prec: Precision) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: Precision) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(i: i64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(i, prec.bits()), prec.bits())
    }

    pub fn from_f64(f: f64, prec: Precision) -> Self {
        Self::wrap(BigFloat::from_f64(f, prec.bits()), prec.bits())
    }

    pub fn from_bigint(i: &BigInt, prec: Precision) -> Self {
        Self::from_bigint_bits(i, prec.bits())
    }

    fn from_bigint_bits(i: &BigInt, bits: usize) -> Self {
        // astro-float parses at the target precision; integers below 2^63
        // take the direct route.
        if let Ok(small) = i64::try_from(i) {
            return Self::wrap(BigFloat::from_i64(small, bits), bits);
        }
        let s = i.to_string();
        let v = with_consts(|cc| BigFloat::parse(&s, Radix::Dec, bits, RM, cc));
        Self::wrap(v, bits)
    }

    pub fn from_ratio(r: &BigRational, prec: Precision) -> Self {
        let bits = prec.bits();
        let num = Self::from_bigint_bits(r.numer(), bits);
        if r.denom().is_one() {
            return num;
        }
        let den = Self::from_bigint_bits(r.denom(), bits);
        Self::wrap(num.v.div(&den.v, bits, RM), bits)
    }

    /// Parses a decimal literal such as `-0.125`, `2.5e-3` or `7`.
    pub fn parse_decimal(s: &str, prec: Precision) -> Result<Self> {
        Ok(Self::from_ratio(&parse_decimal_ratio(s)?, prec))
    }

    pub fn pi(prec: Precision) -> Self {
        let bits = prec.bits();
        Self::wrap(with_consts(|cc| cc.pi(bits, RM)), bits)
    }

    /// `10^e` at the given precision.
    pub fn pow10(e: i64, prec: Precision) -> Self {
        let ten = BigInt::from(10u32);
        let mag = ten.pow(e.unsigned_abs() as u32);
        let r = if e >= 0 {
            BigRational::from_integer(mag)
        } else {
            BigRational::new(BigInt::one(), mag)
        };
        Self::from_ratio(&r, prec)
    }

    /// Re-rounds to the given precision.
    pub fn with_precision(&self, prec: Precision) -> Self {
        let mut v = self.v.clone();
        // set_precision only fails on a bad precision value, which bits() never produces
        let _ = v.set_precision(prec.bits(), RM);
        Self::wrap(v, prec.bits())
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.v.is_negative()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.bits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.bits, RM), self.bits)
    }

    pub fn sin(&self) -> Self {
        let bits = self.bits();
        if self.v.is_zero() {
            return Self::wrap(BigFloat::from_i64(0, bits), bits);
        }
        Self::wrap(with_consts(|cc| self.v.sin(bits, RM, cc)), bits)
    }

    pub fn cos(&self) -> Self {
        let bits = self.bits();
        // astro-float returns NaN for cos(0)
        if self.v.is_zero() {
            return Self::wrap(BigFloat::from_i64(1, bits), bits);
        }
        Self::wrap(with_consts(|cc| self.v.cos(bits, RM, cc)), bits)
    }

    pub fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Self::wrap(BigFloat::from_i64(1, self.bits), self.bits);
        }
        Self::wrap(self.v.powi(n as usize, self.bits, RM), self.bits)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        let bits = self.bits();
        Self::wrap(self.v.mul(&BigFloat::from_i64(k, bits), bits, RM), bits)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        let bits = self.bits();
        Self::wrap(self.v.div(&BigFloat::from_i64(k, bits), bits, RM), bits)
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Nearest `f64`. Values outside the `f64` range saturate to ±inf or 0.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.to_sci_string(20).parse::<f64>().unwrap_or(f64::NAN)
    }

    /// Scientific notation with `sig` significant digits, e.g.
    /// `-1.2500000000000000e-3`. Zero renders as `0`.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        match self.decimal_expansion() {
            None => "NaN".to_string(),
            Some(None) => "0".to_string(),
            Some(Some((neg, digits, exp))) => {
                let (digits, exp) = round_digits(&digits, exp, sig);
                let mut out = String::with_capacity(sig + 8);
                if neg {
                    out.push('-');
                }
                out.push_str(&digits[..1]);
                if sig > 1 {
                    out.push('.');
                    out.push_str(&digits[1..]);
                }
                out.push('e');
                out.push_str(&exp.to_string());
                out
            }
        }
    }

    /// `None` for NaN/inf, `Some(None)` for zero, otherwise sign, digit
    /// string and decimal exponent of the leading digit.
    fn decimal_expansion(&self) -> Option<Option<(bool, String, i64)>> {
        if !self.is_finite() {
            return None;
        }
        if self.is_zero() {
            return Some(None);
        }
        let s = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).ok()?;
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.as_str()),
        };
        let (mant, exp) = match body.split_once('e') {
            Some((m, e)) => (m, e.parse::<i64>().ok()?),
            None => (body, 0),
        };
        let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
        let mut digits: String = int_part.chars().chain(frac_part.chars()).collect();
        // leading zeros shift the exponent down
        let mut exp = exp + int_part.len() as i64 - 1;
        let lead = digits.bytes().take_while(|&b| b == b'0').count();
        if lead == digits.len() {
            return Some(None);
        }
        digits.drain(..lead);
        exp -= lead as i64;
        Some(Some((neg, digits, exp)))
    }
}

/// Rounds a digit string half-up to `sig` digits, padding with zeros.
fn round_digits(digits: &str, exp: i64, sig: usize) -> (String, i64) {
    let mut d: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
    if d.len() <= sig {
        d.resize(sig, 0);
        return (d.iter().map(|&x| (x + b'0') as char).collect(), exp);
    }
    let round_up = d[sig] >= 5;
    d.truncate(sig);
    let mut exp = exp;
    if round_up {
        let mut i = sig;
        loop {
            if i == 0 {
                d.insert(0, 1);
                d.truncate(sig);
                exp += 1;
                break;
            }
            i -= 1;
            if d[i] == 9 {
                d[i] = 0;
            } else {
                d[i] += 1;
                break;
            }
        }
    }
    (d.iter().map(|&x| (x + b'0') as char).collect(), exp)
}

/// Parses a decimal literal exactly into a rational.
pub fn parse_decimal_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("not a decimal number: {s:?}"));
    let t = s.trim();
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int_part, frac_part) = mant.split_once('.').unwrap_or((mant, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = digits.parse().map_err(|_| bad())?;
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let r = if scale >= 0 {
        BigRational::from_integer(num * ten.pow(scale as u32))
    } else {
        BigRational::new(num, ten.pow(scale.unsigned_abs()))
    };
    Ok(r)
}

/// Renders a rational as a finite decimal when its denominator has only the
/// prime factors 2 and 5, otherwise as `p/q`.
pub fn ratio_to_decimal_string(r: &BigRational) -> String {
    let mut den = r.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0u32, 0u32);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let places = twos.max(fives);
    let scaled = r * BigRational::from_integer(BigInt::from(10u32).pow(places));
    let int = scaled.to_integer();
    if places == 0 {
        return int.to_string();
    }
    let neg = int.is_negative();
    let mut s = int.abs().to_string();
    while s.len() <= places as usize {
        s.insert(0, '0');
    }
    let split = s.len() - places as usize;
    let out = format!("{}.{}", &s[..split], &s[split..]);
    if neg {
        format!("-{out}")
    } else {
        out
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_sci_string(25))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(17);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let bits = self.bits().max(rhs.bits());
                Real::wrap(self.v.$method(&rhs.v, bits, RM), bits)
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.bits)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(BigFloat::neg(&self.v), self.bits)
    }
}
