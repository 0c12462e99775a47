//! Finite trigonometric sums `Σ a·cos(ωx)` / `Σ a·sin(ωx)` approximating
//! `J_p(x)`, together with the series truncations that generate them.
//!
//! Amplitudes and frequencies are held as [`ExactReal`]s, so formulas built
//! at angles that are rational multiples of π carry no rounding at all until
//! they are evaluated.

mod builder;
mod catalog;
mod emit;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{pi_multiple_text, Angle, ExactReal, TrigFn};
use crate::oracle::{factorial, BesselOrder};
use crate::real::{Precision, Real};

pub use builder::{build_j0, build_j0_optimal, build_jp, build_odd_order};
pub use catalog::{catalog, catalog_equivalent, CATALOG_NAMES};
pub use emit::{FormulaJson, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Cos,
    Sin,
}

impl TermKind {
    pub fn name(self) -> &'static str {
        match self {
            TermKind::Cos => "cos",
            TermKind::Sin => "sin",
        }
    }
}

/// How a frequency is displayed; the value itself lives in
/// [`FrequencyExpr::value`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FrequencyForm {
    /// `cos(rπ)`
    CosOf(BigRational),
    /// `sin(rπ)`
    SinOf(BigRational),
    /// a rational or a surd combination such as `√2/2`
    Literal,
}

/// Coefficient of `x` inside a trigonometric term. Always non-negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrequencyExpr {
    form: FrequencyForm,
    value: ExactReal,
}

impl FrequencyExpr {
    /// Wraps a non-negative exact value. Callers fold negative frequencies
    /// before getting here.
    fn from_value(value: ExactReal) -> Self {
        let form = match value.as_scaled_angle() {
            Some((c, Angle { func, turn })) if c.is_one() => match func {
                TrigFn::Cos => FrequencyForm::CosOf(turn),
                TrigFn::Sin => FrequencyForm::SinOf(turn),
            },
            _ => FrequencyForm::Literal,
        };
        Self { form, value }
    }

    pub fn form(&self) -> &FrequencyForm {
        &self.form
    }

    pub fn value(&self) -> &ExactReal {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn to_real(&self, prec: Precision) -> Real {
        self.value.to_real(prec)
    }

    /// `cos(5π/24)`, `√2/2`, `1`.
    pub fn text(&self) -> String {
        match &self.form {
            FrequencyForm::CosOf(r) => format!("cos({})", pi_multiple_text(r)),
            FrequencyForm::SinOf(r) => format!("sin({})", pi_multiple_text(r)),
            FrequencyForm::Literal => self.value.text(),
        }
    }
}

/// One summand `amplitude · kind(frequency · x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigTerm {
    pub amplitude: ExactReal,
    pub kind: TermKind,
    pub frequency: FrequencyExpr,
}

impl TrigTerm {
    /// A cosine term of zero frequency.
    pub fn is_constant(&self) -> bool {
        self.kind == TermKind::Cos && self.frequency.is_zero()
    }

    /// Display label such as `1/4·cos(x·cos(π/8))`.
    pub fn label(&self) -> String {
        emit::term_text(self, false)
    }
}

/// Which truncated series a formula was generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesFamily {
    /// `(1/n) Σ_ℓ cos[x cos(θ + πℓ/n)]`, approximating `J_0`.
    CosineNodes,
    /// `(1/n) Σ_ℓ cos[x sin φ_ℓ + p φ_ℓ]` at `φ_ℓ = θ + 2πℓ/n`, approximating `J_p`.
    PhaseShifted,
    /// `Σ_ℓ sin[x cos((θ + 2πℓ)/(2n+1))]`, approximating `J_{2n+1}`.
    OddOrder,
    /// Printed in the catalog rather than generated.
    Named,
}

/// Generator parameters. `theta` is stored as a multiple of π.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ApproxSpec {
    pub p: BesselOrder,
    pub n: u32,
    pub theta: BigRational,
    pub family: SeriesFamily,
}

impl ApproxSpec {
    pub fn validate(&self) -> Result<()> {
        match self.family {
            SeriesFamily::CosineNodes => {
                if self.p.get() != 0 {
                    return Err(Error::InvalidSpec("cosine-node series approximates J_0 only (p = 0)".into()));
                }
                if self.n == 0 {
                    return Err(Error::InvalidSpec("requires n >= 1".into()));
                }
                if self.theta.is_negative() || self.theta > BigRational::new(1.into(), 2.into()) {
                    return Err(Error::InvalidSpec(format!(
                        "requires 0 <= theta <= pi/2, got theta = {}",
                        pi_multiple_text(&self.theta)
                    )));
                }
            }
            SeriesFamily::PhaseShifted => {
                // at 2p = n the J_{n-p} = J_p term carries cos(nθ) = 0
                if 2 * self.p.get() > self.n {
                    return Err(Error::InvalidSpec(format!(
                        "requires 2p < n (2p = n allowed), got p = {} and n = {}",
                        self.p, self.n
                    )));
                }
                let expected = BigRational::new(BigInt::one(), BigInt::from(2 * self.n));
                if self.theta != expected {
                    return Err(Error::InvalidSpec(format!(
                        "phase-shifted series uses theta = pi/(2n) = {}",
                        pi_multiple_text(&expected)
                    )));
                }
            }
            SeriesFamily::OddOrder => {
                if self.p.get() != 2 * self.n + 1 {
                    return Err(Error::InvalidSpec(format!(
                        "odd-order series requires p = 2n+1, got p = {} and n = {}",
                        self.p, self.n
                    )));
                }
            }
            SeriesFamily::Named => {}
        }
        Ok(())
    }

    /// Short ASCII identifier, e.g. `cosine_nodes(n=4,theta=pi/8)`.
    pub fn id(&self) -> String {
        match self.family {
            SeriesFamily::CosineNodes => {
                format!("cosine_nodes(n={},theta={})", self.n, theta_ascii(&self.theta))
            }
            SeriesFamily::PhaseShifted => format!("phase_shifted(p={},n={})", self.p, self.n),
            SeriesFamily::OddOrder => format!("odd_order(n={})", self.n),
            SeriesFamily::Named => "named".into(),
        }
    }
}

fn theta_ascii(r: &BigRational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let num = if r.numer().is_one() { "pi".to_string() } else { format!("{}*pi", r.numer()) };
    if r.denom().is_one() {
        num
    } else {
        format!("{num}/{}", r.denom())
    }
}

/// Leading behaviour `ε(x) ≈ coeff · x^order` of `ε = J_p - formula`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedError {
    pub order: u32,
    /// `None` when the coefficient is not known in closed form.
    pub coeff: Option<ExactReal>,
}

impl PredictedError {
    /// `sign · scale / (2^order · order!)`: the contribution of a neglected
    /// `scale · J_order` term.
    pub(crate) fn from_neglected(order: u32, scale: ExactReal) -> Self {
        let den = BigInt::from(2u32).pow(order) * factorial(order);
        let coeff = scale.scale(&BigRational::new(BigInt::one(), den));
        Self { order, coeff: Some(coeff) }
    }
}

/// A trigonometric-sum approximation of `J_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigFormula {
    pub name: Option<String>,
    pub target: BesselOrder,
    pub spec: Option<ApproxSpec>,
    pub terms: Vec<TrigTerm>,
    pub predicted_error: PredictedError,
    /// Set when two terms were merged because their frequencies agree
    /// numerically although their exact forms differ.
    pub merged_numerically: bool,
}

impl TrigFormula {
    /// Identifier used in reports: the catalog name or the generator spec.
    pub fn id(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        match &self.spec {
            Some(s) => s.id(),
            None => "formula".into(),
        }
    }

    /// Evaluates `Σ a·kind(ωx)`.
    pub fn eval(&self, x: &Real, prec: Precision) -> Real {
        self.resolve(prec).eval(x)
    }

    /// Rounds amplitudes and frequencies once for repeated evaluation.
    pub fn resolve(&self, prec: Precision) -> ResolvedFormula {
        let terms = self
            .terms
            .iter()
            .map(|t| ResolvedTerm {
                amplitude: t.amplitude.to_real(prec),
                kind: t.kind,
                frequency: t.frequency.to_real(prec),
            })
            .collect();
        ResolvedFormula { prec, terms }
    }

    /// `Σ |a|`, an upper bound on `|formula(x)|`.
    pub fn amplitude_norm(&self, prec: Precision) -> Real {
        self.terms
            .iter()
            .fold(Real::zero(prec), |acc, t| acc + t.amplitude.to_real(prec).abs())
    }

    pub fn emit(&self, format: OutputFormat) -> String {
        emit::emit(self, format)
    }
}

impl fmt::Display for TrigFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&emit::emit(self, OutputFormat::Text))
    }
}

#[derive(Debug, Clone)]
struct ResolvedTerm {
    amplitude: Real,
    kind: TermKind,
    frequency: Real,
}

/// A formula with amplitudes and frequencies rounded to one precision.
#[derive(Debug, Clone)]
pub struct ResolvedFormula {
    prec: Precision,
    terms: Vec<ResolvedTerm>,
}

impl ResolvedFormula {
    pub fn eval(&self, x: &Real) -> Real {
        let x = x.with_precision(self.prec);
        let mut sum = Real::zero(self.prec);
        for t in &self.terms {
            let arg = &t.frequency * &x;
            let v = match t.kind {
                TermKind::Cos => arg.cos(),
                TermKind::Sin => arg.sin(),
            };
            sum = sum + &t.amplitude * v;
        }
        sum
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }
}

/// Collects terms, folding negative frequencies and merging duplicates.
#[derive(Debug, Default)]
pub(crate) struct TermSet {
    terms: Vec<(TrigTerm, Real)>,
    merged_numerically: bool,
}

/// Frequencies closer than this (at 60 digits) are treated as equal.
const MERGE_DIGITS: i64 = 45;

impl TermSet {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Adds `amplitude · kind(frequency · x)`; `frequency` may be negative or zero.
    pub(crate) fn push(&mut self, kind: TermKind, amplitude: ExactReal, frequency: ExactReal) {
        if amplitude.is_zero() {
            return;
        }
        let (amplitude, frequency) = match frequency.signum() {
            0 if kind == TermKind::Sin => return,
            -1 => {
                let f = -frequency;
                match kind {
                    TermKind::Cos => (amplitude, f),
                    TermKind::Sin => (-amplitude, f),
                }
            }
            _ => (amplitude, frequency),
        };
        let prec = merge_precision();
        let numeric = frequency.to_real(prec);
        if let Some((t, _)) = self
            .terms
            .iter_mut()
            .find(|(t, _)| t.kind == kind && t.frequency.value == frequency)
        {
            t.amplitude = &t.amplitude + &amplitude;
            return;
        }
        let tol = Real::pow10(-MERGE_DIGITS, prec);
        if let Some((t, _)) = self
            .terms
            .iter_mut()
            .find(|(t, v)| t.kind == kind && (v - &numeric).abs() < tol)
        {
            t.amplitude = &t.amplitude + &amplitude;
            self.merged_numerically = true;
            return;
        }
        let term = TrigTerm { amplitude, kind, frequency: FrequencyExpr::from_value(frequency) };
        self.terms.push((term, numeric));
    }

    /// Drops cancelled terms and orders the rest: constant first, then by
    /// decreasing frequency, cosines before sines at equal frequency.
    pub(crate) fn finish(self) -> (Vec<TrigTerm>, bool) {
        let mut kept: Vec<(TrigTerm, Real)> =
            self.terms.into_iter().filter(|(t, _)| !t.amplitude.is_zero()).collect();
        kept.sort_by(|(ta, va), (tb, vb)| {
            let ca = ta.is_constant();
            let cb = tb.is_constant();
            cb.cmp(&ca)
                .then_with(|| vb.partial_cmp(va).unwrap_or(Ordering::Equal))
                .then_with(|| ta.kind.cmp(&tb.kind))
        });
        (kept.into_iter().map(|(t, _)| t).collect(), self.merged_numerically)
    }
}

fn merge_precision() -> Precision {
    Precision::default().with_extra_digits(10)
}

/// `J_1 ≈ -d/dx` of a `J_0` approximation.
pub fn differentiate(f: &TrigFormula) -> Result<TrigFormula> {
    if f.target.get() != 0 {
        return Err(Error::InvalidTarget(format!(
            "differentiation maps J_0 approximations to J_1; formula targets J_{}",
            f.target
        )));
    }
    let mut set = TermSet::new();
    for t in &f.terms {
        let scaled = &t.amplitude * t.frequency.value();
        // -d/dx a·cos(ωx) = aω·sin(ωx);  -d/dx a·sin(ωx) = -aω·cos(ωx)
        match t.kind {
            TermKind::Cos => set.push(TermKind::Sin, scaled, t.frequency.value.clone()),
            TermKind::Sin => set.push(TermKind::Cos, -scaled, t.frequency.value.clone()),
        }
    }
    let (terms, merged) = set.finish();
    // ε₁ = J₁ - (-f') = -(J₀ - f)' so c·x^N becomes -N·c·x^(N-1)
    let order = f.predicted_error.order.saturating_sub(1);
    let coeff = f.predicted_error.coeff.as_ref().map(|c| {
        c.scale(&BigRational::from_integer(-BigInt::from(f.predicted_error.order)))
    });
    Ok(TrigFormula {
        name: f.name.as_ref().map(|n| format!("-d/dx {n}")),
        target: BesselOrder(1),
        spec: None,
        terms,
        predicted_error: PredictedError { order, coeff },
        merged_numerically: merged || f.merged_numerically,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn folding_negative_frequencies() {
        let mut set = TermSet::new();
        set.push(TermKind::Cos, ExactReal::fraction(1, 2), ExactReal::cos_pi(&r(7, 8)));
        set.push(TermKind::Cos, ExactReal::fraction(1, 2), ExactReal::cos_pi(&r(1, 8)));
        set.push(TermKind::Sin, ExactReal::integer(1), ExactReal::integer(-1));
        let (terms, merged) = set.finish();
        assert!(!merged);
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0].kind, TermKind::Sin);
        assert_eq!(terms[0].amplitude, ExactReal::integer(-1));
        assert_eq!(terms[1].kind, TermKind::Cos);
        assert_eq!(terms[1].amplitude, ExactReal::integer(1));
    }

    #[test]
    fn cancelling_terms_vanish_and_zero_sine_drops() {
        let mut set = TermSet::new();
        set.push(TermKind::Sin, ExactReal::integer(1), ExactReal::fraction(1, 3));
        set.push(TermKind::Sin, ExactReal::integer(1), ExactReal::fraction(-1, 3));
        set.push(TermKind::Sin, ExactReal::integer(5), ExactReal::zero());
        set.push(TermKind::Cos, ExactReal::integer(2), ExactReal::zero());
        let (terms, _) = set.finish();
        assert_eq!(terms.len(), 1);
        assert!(terms[0].is_constant());
    }

    #[test]
    fn numerically_equal_forms_merge_with_flag() {
        // cos(π/5) = (1 + √5)/4 is not expanded, so the two forms differ
        let mut set = TermSet::new();
        set.push(TermKind::Cos, ExactReal::integer(1), ExactReal::cos_pi(&r(1, 5)));
        let surd = (ExactReal::integer(1) + ExactReal::sqrt(5)).scale(&r(1, 4));
        set.push(TermKind::Cos, ExactReal::integer(1), surd);
        let (terms, merged) = set.finish();
        assert!(merged);
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].amplitude, ExactReal::integer(2));
    }

    #[test]
    fn differentiate_rejects_nonzero_target() {
        let f = build_jp(2, 6).unwrap();
        assert!(matches!(differentiate(&f), Err(Error::InvalidTarget(_))));
    }

    #[test]
    fn derivative_of_cosine() {
        let f = build_j0(1, &BigRational::zero()).unwrap();
        let d = differentiate(&f).unwrap();
        assert_eq!(d.emit(OutputFormat::Text), "sin(x)");
        assert_eq!(d.target, BesselOrder(1));
    }

    #[test]
    fn spec_validation_messages() {
        let bad = ApproxSpec {
            p: BesselOrder(3),
            n: 4,
            theta: r(1, 8),
            family: SeriesFamily::PhaseShifted,
        };
        let msg = bad.validate().unwrap_err().to_string();
        assert!(msg.contains("requires 2p < n"), "{msg}");
    }
}
