//! Averages of powers of sines and cosines over equally spaced angles, in
//! closed form as banded binomial sums, with a brute-force evaluator to
//! certify them.
//!
//! Each family averages `base(a_ℓ)^power · weight(a_ℓ)` over the nodes
//! `a_ℓ = (θ + πℓ)/N` or `a_ℓ = (θ + 2πℓ)/N`. The closed form is
//! `sign · 2^scale_log2 · [constant + Σ coeff_h · cos(hθ)]`.

mod brute;
mod taylor;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{pi_multiple_text, ExactReal};
use crate::real::{Precision, Real};

pub use brute::{brute_force, NodeTable};
pub use taylor::{taylor_coeff_of_formula, TaylorCoeff};
pub use verify::{verify, Failure, ParamRange, ThetaGrid, VerificationRanges, VerificationReport};

/// Largest power index `k`.
pub const MAX_K: u32 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SumFamily {
    /// `(1/n) Σ_{ℓ<n} cos^{2k}((θ+ℓπ)/n)`
    CosEvenHalf,
    /// `(1/n) Σ_{ℓ<n} sin^{2k}((θ+ℓπ)/n)`
    SinEvenHalf,
    /// `(1/N) Σ_{ℓ<N} cos^{2k+1}((θ+2πℓ)/N)`, `N = 2n+1`
    CosOddCircle,
    /// `(1/N) Σ_{ℓ<N} cos^{2k}((θ+2πℓ)/N)`, `N = 2n+1`
    CosEvenCircle,
    /// `(1/m) Σ_{ℓ<m} sin^{2k}(a) cos(2qa)`, `a = (θ+πℓ)/m`
    MixEvenEven,
    /// `(1/m) Σ_{ℓ<m} sin^{2k+1}(a) sin((2q+1)a)`, `a = (θ+πℓ)/m`
    MixEvenOdd,
    /// `(1/2m) Σ_{ℓ<2m} sin^{2k+1}(a) sin(2qa)`, `a = (θ+πℓ)/m`; always 0
    ZeroEvenEven,
    /// `(1/N) Σ_{ℓ<N} sin^{2k}(a) cos(2qa)`, `a = (θ+2πℓ)/N`, `N = 2m+1`
    MixOddEvenCos,
    /// `(1/N) Σ_{ℓ<N} sin^{2k+1}(a) sin(2qa)`
    MixOddEvenSin,
    /// `(1/N) Σ_{ℓ<N} sin^{2k}(a) cos((2q+1)a)`
    MixOddOddCos,
    /// `(1/N) Σ_{ℓ<N} sin^{2k+1}(a) sin((2q+1)a)`
    MixOddOddSin,
}

pub const ALL_FAMILIES: [SumFamily; 11] = [
    SumFamily::CosEvenHalf,
    SumFamily::SinEvenHalf,
    SumFamily::CosOddCircle,
    SumFamily::CosEvenCircle,
    SumFamily::MixEvenEven,
    SumFamily::MixEvenOdd,
    SumFamily::ZeroEvenEven,
    SumFamily::MixOddEvenCos,
    SumFamily::MixOddEvenSin,
    SumFamily::MixOddOddCos,
    SumFamily::MixOddOddSin,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Cos,
    Sin,
}

impl SumFamily {
    /// Command-line spelling, e.g. `mix-even-odd`.
    pub fn cli_name(self) -> &'static str {
        match self {
            SumFamily::CosEvenHalf => "cos-even-half",
            SumFamily::SinEvenHalf => "sin-even-half",
            SumFamily::CosOddCircle => "cos-odd-circle",
            SumFamily::CosEvenCircle => "cos-even-circle",
            SumFamily::MixEvenEven => "mix-even-even",
            SumFamily::MixEvenOdd => "mix-even-odd",
            SumFamily::ZeroEvenEven => "zero-even-even",
            SumFamily::MixOddEvenCos => "mix-odd-even-cos",
            SumFamily::MixOddEvenSin => "mix-odd-even-sin",
            SumFamily::MixOddOddCos => "mix-odd-odd-cos",
            SumFamily::MixOddOddSin => "mix-odd-odd-sin",
        }
    }

    /// Takes a harmonic index `q`.
    pub fn is_mixed(self) -> bool {
        !matches!(
            self,
            SumFamily::CosEvenHalf
                | SumFamily::SinEvenHalf
                | SumFamily::CosOddCircle
                | SumFamily::CosEvenCircle
        )
    }

    fn odd_nodes(self) -> bool {
        matches!(
            self,
            SumFamily::CosOddCircle
                | SumFamily::CosEvenCircle
                | SumFamily::MixOddEvenCos
                | SumFamily::MixOddEvenSin
                | SumFamily::MixOddOddCos
                | SumFamily::MixOddOddSin
        )
    }

    /// `N` in the node angles `(θ + cπℓ)/N`.
    pub fn angle_divisor(self, node_param: u32) -> u32 {
        if self.odd_nodes() {
            2 * node_param + 1
        } else {
            node_param
        }
    }

    /// Number of summed nodes.
    pub fn node_count(self, node_param: u32) -> u32 {
        match self {
            SumFamily::ZeroEvenEven => 2 * node_param,
            _ => self.angle_divisor(node_param),
        }
    }

    /// `c` in the node angles `(θ + cπℓ)/N`.
    fn node_step(self) -> i64 {
        if self.odd_nodes() {
            2
        } else {
            1
        }
    }

    /// Node count of the generating series: `2m` or `2m+1` for the mixed
    /// families, `n` or `2n+1` otherwise.
    pub fn series_nodes(self, node_param: u32) -> u32 {
        if self.is_mixed() && !self.odd_nodes() {
            2 * node_param
        } else {
            self.angle_divisor(node_param)
        }
    }

    /// Harmonic order `p` of the weight (0 for unweighted families).
    pub fn harmonic_order(self, q: u32) -> u32 {
        match self {
            SumFamily::MixEvenEven
            | SumFamily::ZeroEvenEven
            | SumFamily::MixOddEvenCos
            | SumFamily::MixOddEvenSin => 2 * q,
            SumFamily::MixEvenOdd | SumFamily::MixOddOddCos | SumFamily::MixOddOddSin => 2 * q + 1,
            _ => 0,
        }
    }

    pub fn power(self, k: u32) -> u32 {
        match self {
            SumFamily::CosOddCircle
            | SumFamily::MixEvenOdd
            | SumFamily::ZeroEvenEven
            | SumFamily::MixOddEvenSin
            | SumFamily::MixOddOddSin => 2 * k + 1,
            _ => 2 * k,
        }
    }

    pub(crate) fn base(self) -> Trig {
        match self {
            SumFamily::CosEvenHalf | SumFamily::CosOddCircle | SumFamily::CosEvenCircle => Trig::Cos,
            _ => Trig::Sin,
        }
    }

    pub(crate) fn weight(self) -> Option<Trig> {
        match self {
            SumFamily::MixEvenEven | SumFamily::MixOddEvenCos | SumFamily::MixOddOddCos => {
                Some(Trig::Cos)
            }
            SumFamily::MixEvenOdd
            | SumFamily::ZeroEvenEven
            | SumFamily::MixOddEvenSin
            | SumFamily::MixOddOddSin => Some(Trig::Sin),
            _ => None,
        }
    }

    /// Largest `q` allowed by `2p < series_nodes`, if any.
    pub fn max_q(self, node_param: u32) -> Option<u32> {
        if !self.is_mixed() {
            return Some(0);
        }
        let n = self.series_nodes(node_param);
        (0..n).take_while(|&q| 2 * self.harmonic_order(q) < n).last()
    }

    /// `k` range covering three bands.
    pub fn auto_k_max(self, node_param: u32) -> u32 {
        (3 * self.series_nodes(node_param)).min(MAX_K)
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for SumFamily {
    type Err = Error;

    /// Accepts `mix-even-odd`, `mix_even_odd` or `MIX_EVEN_ODD`.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.cli_name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = ALL_FAMILIES.iter().map(|f| f.cli_name()).collect();
                Error::InvalidArgument(format!("unknown family {s:?}; known: {}", names.join(", ")))
            })
    }
}

/// An angle either as an exact multiple of π or as a raw real.
#[derive(Debug, Clone)]
pub enum Theta {
    PiMultiple(BigRational),
    Raw(Real),
}

impl Theta {
    pub fn zero() -> Self {
        Theta::PiMultiple(BigRational::zero())
    }

    /// Parses `pi`, `pi/b`, `a*pi`, `a*pi/b` (optionally signed) into an
    /// exact multiple of π; anything else is read as a decimal in radians.
    pub fn parse(s: &str, prec: Precision) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(at) = t.find("pi") else {
            return Ok(match crate::real::parse_decimal_ratio(&t)? {
                r if r.is_zero() => Theta::zero(),
                _ => Theta::Raw(Real::parse_decimal(&t, prec)?),
            });
        };
        let bad = || Error::InvalidArgument(format!("bad angle {s:?}; expected a*pi/b or a decimal"));
        let int = |x: &str| x.parse::<BigInt>().map_err(|_| bad());
        let num = match &t[..at] {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            head => int(head.strip_suffix('*').ok_or_else(bad)?)?,
        };
        let den = match &t[at + 2..] {
            "" => BigInt::one(),
            tail => int(tail.strip_prefix('/').ok_or_else(bad)?)?,
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Theta::PiMultiple(BigRational::new(num, den)))
    }

    pub fn to_real(&self, prec: Precision) -> Real {
        match self {
            Theta::PiMultiple(r) => Real::pi(prec) * Real::from_ratio(r, prec),
            Theta::Raw(x) => x.with_precision(prec),
        }
    }

    pub fn text(&self) -> String {
        match self {
            Theta::PiMultiple(r) => pi_multiple_text(r),
            Theta::Raw(x) => x.to_sci_string(20),
        }
    }
}

#[derive(Debug, Clone)]
pub struct PowerSumQuery {
    pub family: SumFamily,
    /// `n` or `m`, per family
    pub node_param: u32,
    /// harmonic index, mixed families only
    pub q: u32,
    /// power index
    pub k: u32,
    pub theta: Theta,
}

impl PowerSumQuery {
    pub fn new(family: SumFamily, node_param: u32, q: u32, k: u32, theta: Theta) -> Self {
        Self { family, node_param, q, k, theta }
    }

    pub fn validate(&self) -> Result<()> {
        let f = self.family;
        if self.node_param == 0 {
            return Err(Error::UnsupportedQuery(format!("{f}: node parameter must be positive")));
        }
        if self.k > MAX_K {
            return Err(Error::UnsupportedQuery(format!("{f}: k = {} exceeds {MAX_K}", self.k)));
        }
        if !f.is_mixed() {
            if self.q != 0 {
                return Err(Error::UnsupportedQuery(format!("{f}: q applies to mixed families only")));
            }
            return Ok(());
        }
        let p = f.harmonic_order(self.q);
        let n = f.series_nodes(self.node_param);
        if 2 * p >= n {
            return Err(Error::UnsupportedQuery(format!(
                "{f}: requires 2p < n, got p = {p} and n = {n}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    /// the band multiplies `cos(harmonic · θ)`
    pub harmonic: u32,
    pub coeff: BigInt,
}

/// `global_sign · 2^scale_log2 · [constant_term + Σ coeff · cos(harmonic · θ)]`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormSum {
    pub scale_log2: i32,
    pub global_sign: i32,
    pub constant_term: BigInt,
    pub bands: Vec<Band>,
}

impl ClosedFormSum {
    fn prefactor(&self) -> BigRational {
        let p = BigRational::new(BigInt::one(), BigInt::from(2u32).pow(self.scale_log2.unsigned_abs()));
        let p = if self.scale_log2 >= 0 { p.recip() } else { p };
        if self.global_sign < 0 {
            -p
        } else {
            p
        }
    }

    /// Exact value at `θ = turn·π`.
    pub fn eval_exact(&self, turn: &BigRational) -> ExactReal {
        let mut sum = ExactReal::rational(BigRational::from_integer(self.constant_term.clone()));
        for b in &self.bands {
            let angle = turn * BigRational::from_integer(BigInt::from(b.harmonic));
            let c = ExactReal::cos_pi(&angle).scale(&BigRational::from_integer(b.coeff.clone()));
            sum = sum + c;
        }
        sum.scale(&self.prefactor())
    }

    /// Rational value at `θ = turn·π` when every `cos(hθ)` is rational.
    pub fn eval_rational(&self, turn: &BigRational) -> Option<BigRational> {
        self.eval_exact(turn).as_rational()
    }

    pub fn eval(&self, theta: &Theta, prec: Precision) -> Real {
        let th = theta.to_real(prec);
        let mut sum = Real::from_bigint(&self.constant_term, prec);
        for b in &self.bands {
            let c = (&th * Real::from_i64(b.harmonic as i64, prec)).cos();
            sum = sum + Real::from_bigint(&b.coeff, prec) * c;
        }
        sum * Real::from_ratio(&self.prefactor(), prec)
    }

    /// e.g. `4^-10·[184756 - 40·cos(2θ)]`.
    pub fn text(&self) -> String {
        let mut inner = String::new();
        let mut first = true;
        if !self.constant_term.is_zero() || self.bands.is_empty() {
            inner.push_str(&self.constant_term.to_string());
            first = false;
        }
        for b in &self.bands {
            let neg = b.coeff.is_negative();
            let mag = b.coeff.abs();
            let body = if mag.is_one() {
                format!("cos({}θ)", b.harmonic)
            } else {
                format!("{mag}·cos({}θ)", b.harmonic)
            };
            match (first, neg) {
                (true, true) => inner.push('-'),
                (true, false) => {}
                (false, true) => inner.push_str(" - "),
                (false, false) => inner.push_str(" + "),
            }
            inner.push_str(&body);
            first = false;
        }
        let sign = if self.global_sign < 0 { "-" } else { "" };
        format!("{sign}2^{}·[{inner}]", self.scale_log2)
    }
}

/// `C(n, r)`, zero outside `0 <= r <= n`.
pub fn binom(n: u32, r: i64) -> BigInt {
    if r < 0 || r > n as i64 {
        return BigInt::zero();
    }
    let r = (r as u32).min(n - r as u32);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn parity(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// Banded closed form of a query.
pub fn closed_form(query: &PowerSumQuery) -> Result<ClosedFormSum> {
    query.validate()?;
    let f = query.family;
    let k = query.k as i64;
    let q = query.q as i64;
    let m = query.node_param as i64;
    let n_odd = 2 * m + 1;
    let even = 2 * query.k;
    let odd = 2 * query.k + 1;
    let mut bands = Vec::new();
    let mut band = |harmonic: i64, coeff: BigInt| {
        if !coeff.is_zero() {
            bands.push(Band { harmonic: harmonic as u32, coeff });
        }
    };

    let (scale_log2, global_sign, constant_term) = match f {
        SumFamily::CosEvenHalf | SumFamily::SinEvenHalf => {
            let mut j = 1;
            while j * m <= k {
                let s = if f == SumFamily::SinEvenHalf { parity(j * m % 2 == 1) } else { 1 };
                band(2 * j, BigInt::from(2 * s) * binom(even, k - j * m));
                j += 1;
            }
            (-(even as i32), 1, binom(even, k))
        }
        SumFamily::CosOddCircle => {
            let mut c = 1;
            while (c * n_odd - 1) / 2 <= k {
                band(c, binom(odd, k - (c * n_odd - 1) / 2));
                c += 2;
            }
            (-(even as i32), 1, BigInt::zero())
        }
        SumFamily::CosEvenCircle => {
            let mut j = 1;
            while j * n_odd <= k {
                band(2 * j, BigInt::from(2) * binom(even, k - j * n_odd));
                j += 1;
            }
            (-(even as i32), 1, binom(even, k))
        }
        SumFamily::MixEvenEven => {
            let mut j = 1;
            while j * m - q <= k {
                let c = binom(even, k - j * m + q) + binom(even, k - j * m - q);
                band(2 * j, BigInt::from(parity(j * m % 2 == 1)) * c);
                j += 1;
            }
            (-(even as i32), parity(q % 2 == 1) as i32, binom(even, k - q))
        }
        SumFamily::MixEvenOdd => {
            let mut c = 1;
            while c * m <= k + q + 1 {
                let v = binom(odd, k - q + c * m) + binom(odd, k - q - c * m);
                band(2 * c, BigInt::from(parity(c * m % 2 == 1)) * v);
                c += 1;
            }
            (-(odd as i32), parity(q % 2 == 1) as i32, binom(odd, k - q))
        }
        SumFamily::ZeroEvenEven => (-(odd as i32), 1, BigInt::zero()),
        SumFamily::MixOddEvenCos => {
            let mut j = 1;
            while j * n_odd - q <= k {
                let c = binom(even, k - j * n_odd + q) + binom(even, k - j * n_odd - q);
                band(2 * j, BigInt::from(parity(j % 2 == 1)) * c);
                j += 1;
            }
            (-(even as i32), parity(q % 2 == 1) as i32, binom(even, k - q))
        }
        SumFamily::MixOddEvenSin => {
            let mut c = 1;
            loop {
                let u = (c * n_odd - 1) / 2;
                if u > k + q {
                    break;
                }
                let v = binom(odd, k + q - u) - binom(odd, k - q - u);
                band(c, BigInt::from(parity((u + m) % 2 == 1)) * v);
                c += 2;
            }
            (-(odd as i32), parity((q + m + 1) % 2 == 1) as i32, BigInt::zero())
        }
        SumFamily::MixOddOddCos => {
            let mut c = 1;
            loop {
                let u = (c * n_odd - 1) / 2;
                if u > k + q {
                    break;
                }
                let v = binom(even, k - u + q) - binom(even, k - u - q - 1);
                band(c, BigInt::from(parity((u + m) % 2 == 1)) * v);
                c += 2;
            }
            (-(even as i32), parity((m + q) % 2 == 1) as i32, BigInt::zero())
        }
        SumFamily::MixOddOddSin => {
            let mut d = 1;
            while d * n_odd <= k + q + 1 {
                let v = binom(odd, k - q + d * n_odd) + binom(odd, k - q - d * n_odd);
                band(2 * d, BigInt::from(parity(d % 2 == 1)) * v);
                d += 1;
            }
            (-(odd as i32), parity(q % 2 == 1) as i32, binom(odd, k - q))
        }
    };
    Ok(ClosedFormSum { scale_log2, global_sign, constant_term, bands })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn q(family: SumFamily, node: u32, q: u32, k: u32) -> PowerSumQuery {
        PowerSumQuery::new(family, node, q, k, Theta::zero())
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(20, 10), BigInt::from(184_756));
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(5, 6), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn nine_node_sine_example() {
        let c = closed_form(&q(SumFamily::SinEvenHalf, 9, 0, 10)).unwrap();
        assert_eq!(c.scale_log2, -20);
        assert_eq!(c.constant_term, binom(20, 10));
        assert_eq!(c.bands, vec![Band { harmonic: 2, coeff: BigInt::from(-40) }]);
        assert_eq!(c.text(), "2^-20·[184756 - 40·cos(2θ)]");
    }

    #[test]
    fn three_node_circle_example() {
        let c = closed_form(&q(SumFamily::CosEvenCircle, 1, 0, 6)).unwrap();
        let expected = vec![
            Band { harmonic: 2, coeff: BigInt::from(2) * binom(12, 3) },
            Band { harmonic: 4, coeff: BigInt::from(2) },
        ];
        assert_eq!(c.bands, expected);
        assert_eq!(c.constant_term, binom(12, 6));
    }

    #[test]
    fn worked_mixed_example() {
        let c = closed_form(&q(SumFamily::MixEvenOdd, 5, 1, 6)).unwrap();
        assert_eq!(c.eval_rational(&BigRational::zero()), Some(r(-125, 1024)));
    }

    #[test]
    fn power_zero_is_one() {
        for n in 1..6 {
            let c = closed_form(&q(SumFamily::CosEvenHalf, n, 0, 0)).unwrap();
            assert_eq!(c.eval_rational(&r(1, 7)), Some(BigRational::one()));
        }
    }

    #[test]
    fn odd_circle_vanishes_below_threshold() {
        let c = closed_form(&q(SumFamily::CosOddCircle, 2, 0, 1)).unwrap();
        assert!(c.bands.is_empty());
        assert!(c.constant_term.is_zero());
    }

    #[test]
    fn precondition_on_mixed_families() {
        let e = closed_form(&q(SumFamily::MixOddOddSin, 2, 1, 3)).unwrap_err();
        assert!(matches!(e, Error::UnsupportedQuery(_)));
        assert!(closed_form(&q(SumFamily::CosEvenHalf, 2, 1, 3)).is_err());
        assert!(closed_form(&q(SumFamily::CosEvenHalf, 2, 0, 101)).is_err());
    }

    #[test]
    fn max_q_matches_precondition() {
        assert_eq!(SumFamily::MixOddOddSin.max_q(5), Some(2));
        assert_eq!(SumFamily::MixEvenOdd.max_q(1), None);
        assert_eq!(SumFamily::MixEvenEven.max_q(3), Some(1));
    }

    #[test]
    fn odd_odd_cos_third_band_enters_at_3m_plus_1_minus_q() {
        // the two-binomial cos(θ) form is quoted up to k < 3m+q+2, but the
        // cos(3θ) band is already present from k = 3m+1-q
        let prec = Precision::default();
        let (m, qi) = (3u32, 1u32);
        let k = 3 * m + 1 - qi;
        let theta = Theta::PiMultiple(r(1, 5));
        let query = PowerSumQuery::new(SumFamily::MixOddOddCos, m, qi, k, theta.clone());
        let cf = closed_form(&query).unwrap();
        assert!(cf.bands.iter().any(|b| b.harmonic == 3));

        let lhs = brute_force(&query, prec).unwrap();
        assert!((&lhs - cf.eval(&theta, prec)).abs() < prec.epsilon());

        let (k, m, qi) = (k as i64, m as i64, qi as i64);
        let two_binomials = binom(2 * k as u32, k - m + qi) - binom(2 * k as u32, k - m - qi - 1);
        let sign = if (m + qi) % 2 == 1 { -1 } else { 1 };
        let quoted = Real::from_bigint(&(two_binomials * BigInt::from(sign)), prec)
            * theta.to_real(prec).cos()
            / Real::from_i64(4, prec).powi(k as u32);
        assert!((lhs - quoted).abs().to_f64() > 1e-6);
    }

    #[test]
    fn theta_grammar() {
        let prec = Precision::default();
        let exact = |s: &str| match Theta::parse(s, prec).unwrap() {
            Theta::PiMultiple(r) => r,
            Theta::Raw(_) => panic!("{s} parsed as raw"),
        };
        assert_eq!(exact("pi/8"), r(1, 8));
        assert_eq!(exact("3*pi/4"), r(3, 4));
        assert_eq!(exact("-pi"), r(-1, 1));
        assert_eq!(exact("2*pi"), r(2, 1));
        assert_eq!(exact("0"), r(0, 1));
        assert!(matches!(Theta::parse("0.7", prec).unwrap(), Theta::Raw(_)));
        for bad in ["pi/0", "3pi", "pi*2", "x"] {
            assert!(Theta::parse(bad, prec).is_err(), "{bad}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in ALL_FAMILIES {
            assert_eq!(f.cli_name().parse::<SumFamily>().unwrap(), f);
        }
        assert_eq!("MIX_ODD_ODD_SIN".parse::<SumFamily>().unwrap(), SumFamily::MixOddOddSin);
        assert!("cos-odd".parse::<SumFamily>().is_err());
    }
}
