//! Exact reals spanned by `√d · cos(rπ)` and `√d · sin(rπ)` over the
//! rationals, with `d` square-free and `r` rational.
//!
//! Every trigonometric value at a rational multiple of π whose denominator
//! divides 12 is expanded into surds, so `cos(π/4)` is stored as `√2/2` and
//! `sin(π/12)` as `(√6 - √2)/4`. Remaining trigonometric factors are kept in
//! a canonical form: `cos(rπ)` with `0 < r < 1/4` or `sin(rπ)` with
//! `0 < r < 1/4`. Products of two trigonometric factors are folded back
//! with the product-to-sum identities, so the set is closed under `+`, `-`
//! and `*`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::real::{Precision, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrigFn {
    Cos,
    Sin,
}

impl TrigFn {
    pub fn name(self) -> &'static str {
        match self {
            TrigFn::Cos => "cos",
            TrigFn::Sin => "sin",
        }
    }
}

/// `func(turn · π)` in canonical range.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle {
    pub func: TrigFn,
    pub turn: BigRational,
}

impl Angle {
    pub fn to_real(&self, prec: Precision) -> Real {
        let a = Real::pi(prec) * Real::from_ratio(&self.turn, prec);
        match self.func {
            TrigFn::Cos => a.cos(),
            TrigFn::Sin => a.sin(),
        }
    }

    pub fn text(&self) -> String {
        format!("{}({})", self.func.name(), pi_multiple_text(&self.turn))
    }

    pub fn latex(&self) -> String {
        format!("\\{}{}", self.func.name(), pi_multiple_latex(&self.turn))
    }
}

/// `rπ` rendered as `π`, `π/8`, `5π/24`, `0`.
pub fn pi_multiple_text(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = r.numer();
    let sign = if num.is_negative() { "-" } else { "" };
    let n = num.abs();
    let head = if n.is_one() { "π".to_string() } else { format!("{n}π") };
    if r.denom().is_one() {
        format!("{sign}{head}")
    } else {
        format!("{sign}{head}/{}", r.denom())
    }
}

pub fn pi_multiple_latex(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = r.numer();
    let sign = if num.is_negative() { "-" } else { "" };
    let n = num.abs();
    let head = if n.is_one() { "\\pi".to_string() } else { format!("{n}\\pi") };
    if r.denom().is_one() {
        format!("{sign}{head}")
    } else {
        format!("{sign}\\tfrac{{{head}}}{{{}}}", r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Basis {
    surd: u64,
    trig: Option<Angle>,
}

impl Basis {
    fn one() -> Self {
        Basis { surd: 1, trig: None }
    }
}

/// An exact real number; see the module docs for the representable set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactReal {
    terms: BTreeMap<Basis, BigRational>,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl ExactReal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: BigRational) -> Self {
        let mut e = Self::zero();
        e.push(Basis::one(), r);
        e
    }

    pub fn integer(i: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn fraction(n: i64, d: i64) -> Self {
        Self::rational(ratio(n, d))
    }

    /// `√d`, reduced to `s·√f` with `f` square-free.
    pub fn sqrt(d: u64) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let (outer, inner) = squarefree_split(d);
        let mut e = Self::zero();
        e.push(
            Basis { surd: inner, trig: None },
            BigRational::from_integer(BigInt::from(outer)),
        );
        e
    }

    /// `cos(turn · π)`.
    pub fn cos_pi(turn: &BigRational) -> Self {
        // reduce to [0, 2), then use cos(2π - a) = cos a and cos(π - a) = -cos a
        let two = BigRational::from_integer(BigInt::from(2));
        let one = BigRational::one();
        let half = ratio(1, 2);
        let mut r = turn - (turn / &two).floor() * &two;
        if r > one {
            r = &two - r;
        }
        let mut negate = false;
        if r > half {
            negate = true;
            r = &one - r;
        }
        let twelfths = &r * BigRational::from_integer(BigInt::from(12));
        let value = if twelfths.is_integer() {
            cos_twelfth(twelfths.to_integer().to_u32().unwrap_or(0))
        } else if r < ratio(1, 4) {
            Self::angle(TrigFn::Cos, r)
        } else {
            Self::angle(TrigFn::Sin, half - r)
        };
        if negate {
            -value
        } else {
            value
        }
    }

    /// `sin(turn · π)`.
    pub fn sin_pi(turn: &BigRational) -> Self {
        Self::cos_pi(&(ratio(1, 2) - turn))
    }

    fn angle(func: TrigFn, turn: BigRational) -> Self {
        let mut e = Self::zero();
        e.push(
            Basis { surd: 1, trig: Some(Angle { func, turn }) },
            BigRational::one(),
        );
        e
    }

    fn push(&mut self, basis: Basis, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(basis).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (b, c) = self.terms.iter().next()?;
                (*b == Basis::one()).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// True when no trigonometric factor remains (a pure surd combination).
    pub fn is_surd(&self) -> bool {
        self.terms.keys().all(|b| b.trig.is_none())
    }

    /// Number of basis terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The single trigonometric factor and rational coefficient when the value
    /// is exactly `c · func(rπ)`.
    pub fn as_scaled_angle(&self) -> Option<(BigRational, Angle)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (b, c) = self.terms.iter().next()?;
        match (&b.trig, b.surd) {
            (Some(a), 1) => Some((c.clone(), a.clone())),
            _ => None,
        }
    }

    /// `(num, den, surd)` when the value is exactly `num/den · √surd`.
    pub fn as_scaled_surd(&self) -> Option<(BigInt, BigInt, u64)> {
        match self.terms.len() {
            0 => Some((BigInt::zero(), BigInt::one(), 1)),
            1 => {
                let (b, c) = self.terms.iter().next()?;
                if b.trig.is_some() {
                    return None;
                }
                Some((c.numer().clone(), c.denom().clone(), b.surd))
            }
            _ => None,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(b, c)| (b.clone(), c * r)).collect();
        Self { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::integer(1);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_real(&self, prec: Precision) -> Real {
        let mut sum = Real::zero(prec);
        for (b, c) in &self.terms {
            let mut t = Real::from_ratio(c, prec);
            if b.surd != 1 {
                t = t * Real::from_i64(b.surd as i64, prec).sqrt();
            }
            if let Some(a) = &b.trig {
                t = t * a.to_real(prec);
            }
            sum = sum + t;
        }
        sum
    }

    /// -1, 0 or +1. Single terms are signed by their coefficient; sums are
    /// resolved numerically at 60 digits.
    pub fn signum(&self) -> i32 {
        match self.terms.len() {
            0 => 0,
            1 => {
                let c = self.terms.values().next().expect("one term");
                if c.is_negative() {
                    -1
                } else {
                    1
                }
            }
            _ => self.to_real(Precision::default().with_extra_digits(10)).signum(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Plain-text rendering, e.g. `√2/2`, `(√6 - √2)/4`, `1/4·cos(π/8)`.
    pub fn text(&self) -> String {
        self.render(false)
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        if self.terms.len() == 1 {
            let (b, c) = self.terms.iter().next().expect("one term");
            let body = render_term(&c.abs(), b, latex);
            return if c.is_negative() { format!("-{body}") } else { body };
        }
        if self.is_surd() {
            // common denominator: (a√6 - b√2)/4
            let lcm = self
                .terms
                .values()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let mut inner = String::new();
            for (i, (b, c)) in self.terms.iter().rev().enumerate() {
                let scaled = (c * BigRational::from_integer(lcm.clone())).to_integer();
                let mag = render_term(&BigRational::from_integer(scaled.abs()), b, latex);
                push_signed(&mut inner, i == 0, scaled.is_negative(), &mag);
            }
            if lcm.is_one() {
                return inner;
            }
            return if latex {
                format!("\\frac{{{inner}}}{{{lcm}}}")
            } else {
                format!("({inner})/{lcm}")
            };
        }
        let mut inner = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let mag = render_term(&c.abs(), b, latex);
            push_signed(&mut inner, i == 0, c.is_negative(), &mag);
        }
        if latex {
            format!("\\left({inner}\\right)")
        } else {
            format!("({inner})")
        }
    }
}

fn push_signed(out: &mut String, first: bool, negative: bool, body: &str) {
    match (first, negative) {
        (true, true) => {
            out.push('-');
        }
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    out.push_str(body);
}

fn render_term(c: &BigRational, b: &Basis, latex: bool) -> String {
    let num = c.numer();
    let den = c.denom();
    let mut s = String::new();
    let surd = if b.surd == 1 {
        None
    } else if latex {
        Some(format!("\\sqrt{{{}}}", b.surd))
    } else {
        Some(format!("√{}", b.surd))
    };
    match (&surd, latex) {
        (None, false) => {
            let _ = write!(s, "{num}");
            if !den.is_one() {
                let _ = write!(s, "/{den}");
            }
        }
        (None, true) => {
            if den.is_one() {
                let _ = write!(s, "{num}");
            } else {
                let _ = write!(s, "\\tfrac{{{num}}}{{{den}}}");
            }
        }
        (Some(r), false) => {
            if !num.is_one() {
                let _ = write!(s, "{num}");
            }
            s.push_str(r);
            if !den.is_one() {
                let _ = write!(s, "/{den}");
            }
        }
        (Some(r), true) => {
            let top = if num.is_one() { r.clone() } else { format!("{num}{r}") };
            if den.is_one() {
                s.push_str(&top);
            } else {
                let _ = write!(s, "\\tfrac{{{top}}}{{{den}}}");
            }
        }
    }
    if let Some(a) = &b.trig {
        let t = if latex { a.latex() } else { a.text() };
        if s == "1" {
            return t;
        }
        if latex {
            s.push_str(&t);
        } else {
            s.push('·');
            s.push_str(&t);
        }
    }
    s
}

/// Splits `d = outer² · inner` with `inner` square-free.
fn squarefree_split(d: u64) -> (u64, u64) {
    let mut outer = 1u64;
    let mut inner = 1u64;
    let mut rest = d;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            inner *= p;
        }
        p += 1;
    }
    inner *= rest;
    (outer, inner)
}

/// `cos(kπ/12)` for `0 ≤ k ≤ 6`.
fn cos_twelfth(k: u32) -> ExactReal {
    let s6 = ExactReal::sqrt(6);
    let s2 = ExactReal::sqrt(2);
    let quarter = ratio(1, 4);
    match k {
        0 => ExactReal::integer(1),
        1 => (&s6 + &s2).scale(&quarter),
        2 => ExactReal::sqrt(3).scale(&ratio(1, 2)),
        3 => s2.scale(&ratio(1, 2)),
        4 => ExactReal::fraction(1, 2),
        5 => (&s6 - &s2).scale(&quarter),
        _ => ExactReal::zero(),
    }
}

/// Product of two canonical trigonometric factors via product-to-sum.
fn angle_product(a: &Angle, b: &Angle) -> ExactReal {
    let diff = &a.turn - &b.turn;
    let sum = &a.turn + &b.turn;
    let half = ratio(1, 2);
    let e = match (a.func, b.func) {
        (TrigFn::Cos, TrigFn::Cos) => ExactReal::cos_pi(&diff) + ExactReal::cos_pi(&sum),
        (TrigFn::Sin, TrigFn::Sin) => ExactReal::cos_pi(&diff) - ExactReal::cos_pi(&sum),
        (TrigFn::Sin, TrigFn::Cos) => ExactReal::sin_pi(&sum) + ExactReal::sin_pi(&diff),
        (TrigFn::Cos, TrigFn::Sin) => ExactReal::sin_pi(&sum) - ExactReal::sin_pi(&diff),
    };
    e.scale(&half)
}

fn basis_product(a: &Basis, b: &Basis) -> ExactReal {
    let g = gcd_u64(a.surd, b.surd);
    let surd = (a.surd / g) * (b.surd / g);
    let outer = BigRational::from_integer(BigInt::from(g));
    let trig = match (&a.trig, &b.trig) {
        (None, None) => ExactReal::integer(1),
        (Some(t), None) | (None, Some(t)) => {
            let mut e = ExactReal::zero();
            e.push(Basis { surd: 1, trig: Some(t.clone()) }, BigRational::one());
            e
        }
        (Some(x), Some(y)) => angle_product(x, y),
    };
    // multiply every term of `trig` by √surd
    let mut out = ExactReal::zero();
    for (tb, tc) in trig.terms {
        let h = gcd_u64(tb.surd, surd);
        let s = (tb.surd / h) * (surd / h);
        out.push(
            Basis { surd: s, trig: tb.trig },
            tc * &outer * BigRational::from_integer(BigInt::from(h)),
        );
    }
    out
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

impl Add<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.push(b.clone(), c.clone());
        }
        out
    }
}

impl Add for ExactReal {
    type Output = ExactReal;
    fn add(self, rhs: ExactReal) -> ExactReal {
        &self + &rhs
    }
}

impl Sub<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: &ExactReal) -> ExactReal {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.push(b.clone(), -c.clone());
        }
        out
    }
}

impl Sub for ExactReal {
    type Output = ExactReal;
    fn sub(self, rhs: ExactReal) -> ExactReal {
        &self - &rhs
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        let terms = self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect();
        ExactReal { terms }
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;
    fn neg(self) -> ExactReal {
        -&self
    }
}

impl Mul<&ExactReal> for &ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: &ExactReal) -> ExactReal {
        let mut out = ExactReal::zero();
        for (ba, ca) in &self.terms {
            for (bb, cb) in &rhs.terms {
                let c = ca * cb;
                for (b, k) in basis_product(ba, bb).terms {
                    out.push(b, k * &c);
                }
            }
        }
        out
    }
}

impl Mul for ExactReal {
    type Output = ExactReal;
    fn mul(self, rhs: ExactReal) -> ExactReal {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    #[test]
    fn special_values_expand_to_surds() {
        assert_eq!(ExactReal::cos_pi(&r(1, 4)).text(), "√2/2");
        assert_eq!(ExactReal::cos_pi(&r(1, 6)).text(), "√3/2");
        assert_eq!(ExactReal::sin_pi(&r(1, 12)).text(), "(√6 - √2)/4");
        assert_eq!(ExactReal::cos_pi(&r(1, 2)), ExactReal::zero());
        assert_eq!(ExactReal::cos_pi(&r(1, 1)), ExactReal::integer(-1));
        assert_eq!(ExactReal::cos_pi(&r(2, 3)), ExactReal::fraction(-1, 2));
    }

    #[test]
    fn canonical_angles() {
        // cos(5π/8) = -sin(π/8)
        let e = ExactReal::cos_pi(&r(5, 8));
        assert_eq!(e.text(), "-sin(π/8)");
        // cos(13π/18) = -sin(2π/9)
        assert_eq!(ExactReal::cos_pi(&r(13, 18)).text(), "-sin(2π/9)");
        // cos(-π/24) = cos(π/24)
        assert_eq!(ExactReal::cos_pi(&r(-1, 24)), ExactReal::cos_pi(&r(1, 24)));
        assert_eq!(ExactReal::cos_pi(&r(49, 24)), ExactReal::cos_pi(&r(1, 24)));
    }

    #[test]
    fn surd_products_reduce() {
        let s2 = ExactReal::sqrt(2);
        let s6 = ExactReal::sqrt(6);
        assert_eq!(&s2 * &s2, ExactReal::integer(2));
        assert_eq!((&s2 * &s6).text(), "2√3");
        assert_eq!(ExactReal::sqrt(12).text(), "2√3");
    }

    #[test]
    fn trig_products_fold() {
        // 2 sin(π/8) cos(π/8) = sin(π/4) = √2/2
        let s = ExactReal::sin_pi(&r(1, 8));
        let c = ExactReal::cos_pi(&r(1, 8));
        assert_eq!((&s * &c).scale(&r(2, 1)), ExactReal::sqrt(2).scale(&r(1, 2)));
        // cos²(π/8) + sin²(π/8) = 1
        assert_eq!(&c * &c + &s * &s, ExactReal::integer(1));
        // cos(π/24)^24 is rational plus harmonics; check numerically
        let p = ExactReal::cos_pi(&r(1, 24)).pow(24);
        let prec = Precision::default();
        let direct = ExactReal::cos_pi(&r(1, 24)).to_real(prec).powi(24);
        assert!((p.to_real(prec) - direct).abs() < prec.epsilon());
    }

    #[test]
    fn numeric_value_and_sign() {
        let prec = Precision::default();
        let e = ExactReal::sin_pi(&r(1, 12));
        let v = e.to_real(prec);
        let direct = (Real::pi(prec).div_i64(12)).sin();
        assert!((v - direct).abs() < prec.epsilon());
        assert_eq!((-e.clone()).signum(), -1);
        assert_eq!(e.abs(), e);
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(ExactReal::sqrt(3).scale(&r(-1, 9)).latex(), "-\\tfrac{\\sqrt{3}}{9}");
        assert_eq!(ExactReal::cos_pi(&r(1, 8)).scale(&r(1, 4)).latex(), "\\tfrac{1}{4}\\cos\\tfrac{\\pi}{8}");
    }
}
