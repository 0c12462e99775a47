//! Text, LaTeX and JSON renderings of a [`TrigFormula`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::exact::{pi_multiple_latex, pi_multiple_text, ExactReal};
use crate::real::Precision;

use super::{FrequencyForm, SeriesFamily, TermKind, TrigFormula, TrigTerm};

/// Significant digits of the `numeric_string` fields.
const NUMERIC_DIGITS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

pub(crate) fn emit(f: &TrigFormula, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => text(f),
        OutputFormat::Latex => latex(f),
        OutputFormat::Json => {
            serde_json::to_string_pretty(&FormulaJson::from(f)).expect("formula serializes")
        }
    }
}

fn text(f: &TrigFormula) -> String {
    if f.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in f.terms.iter().enumerate() {
        let negative = t.amplitude.signum() < 0;
        let body = term_text(t, true);
        match (i == 0, negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// `a·kind(x·ω)`; with `unsigned` the magnitude of `a` is rendered.
pub(crate) fn term_text(t: &TrigTerm, unsigned: bool) -> String {
    let amp = if unsigned { t.amplitude.abs() } else { t.amplitude.clone() };
    if t.is_constant() {
        return amp.text();
    }
    let arg = if t.frequency.value().as_rational().is_some_and(|r| r.is_one()) {
        "x".to_string()
    } else {
        format!("x·{}", t.frequency.text())
    };
    let call = format!("{}({arg})", t.kind.name());
    match amp.as_rational() {
        Some(r) if r.is_one() => call,
        Some(r) if r == -BigRational::one() => format!("-{call}"),
        _ => format!("{}·{call}", amp.text()),
    }
}

fn frequency_latex(t: &TrigTerm) -> String {
    let f = &t.frequency;
    match f.form() {
        FrequencyForm::CosOf(r) => format!("x\\cos{}", pi_multiple_latex(r)),
        FrequencyForm::SinOf(r) => format!("x\\sin{}", pi_multiple_latex(r)),
        FrequencyForm::Literal => match f.value().as_rational() {
            Some(r) if r.is_one() => "x".into(),
            _ => format!("{}x", f.value().latex()),
        },
    }
}

/// Common factor `g` with every amplitude an integer multiple of it, when
/// all amplitudes share one surd or trigonometric basis.
fn common_factor(terms: &[TrigTerm]) -> Option<(ExactReal, Vec<BigInt>)> {
    if terms.len() < 2 {
        return None;
    }
    let unit = terms[0].amplitude.abs();
    let base = basis_of(&unit)?;
    let mut coeffs = Vec::with_capacity(terms.len());
    for t in terms {
        let c = coefficient_on(&t.amplitude, &base)?;
        coeffs.push(c);
    }
    let num_gcd = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c.numer()));
    let den_lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let g = BigRational::new(num_gcd, den_lcm);
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c / &g).to_integer()).collect();
    let mut factor = base.scale(&g);
    let mut ints = ints;
    if ints[0].is_negative() {
        factor = -factor;
        ints.iter_mut().for_each(|i| *i = -i.clone());
    }
    if factor.as_rational().is_some_and(|r| r.is_one()) {
        return None;
    }
    Some((factor, ints))
}

/// The amplitude with unit coefficient: `1`, `√d` or `func(rπ)`.
fn basis_of(a: &ExactReal) -> Option<ExactReal> {
    if let Some((_, _, surd)) = a.as_scaled_surd() {
        return Some(ExactReal::sqrt(surd));
    }
    let (_, angle) = a.as_scaled_angle()?;
    Some(match angle.func {
        crate::exact::TrigFn::Cos => ExactReal::cos_pi(&angle.turn),
        crate::exact::TrigFn::Sin => ExactReal::sin_pi(&angle.turn),
    })
}

fn coefficient_on(a: &ExactReal, base: &ExactReal) -> Option<BigRational> {
    let b = basis_of(a)?;
    if &b != base {
        return None;
    }
    if let Some((n, d, _)) = a.as_scaled_surd() {
        return Some(BigRational::new(n, d));
    }
    a.as_scaled_angle().map(|(c, _)| c)
}

fn latex(f: &TrigFormula) -> String {
    let lhs = format!("J_{{{}}}(x) \\simeq ", f.target);
    if f.terms.is_empty() {
        return format!("{lhs}0");
    }
    let call = |t: &TrigTerm| {
        if t.is_constant() {
            None
        } else {
            Some(format!("\\{}({})", t.kind.name(), frequency_latex(t)))
        }
    };
    let mut out = lhs;
    if let Some((factor, ints)) = common_factor(&f.terms) {
        let factor_text = factor.latex();
        out.push_str(&factor_text);
        out.push_str("\\left[");
        for (i, (t, c)) in f.terms.iter().zip(&ints).enumerate() {
            let mag = c.abs();
            let body = match call(t) {
                None => mag.to_string(),
                Some(s) if mag.is_one() => s,
                Some(s) => format!("{mag}{s}"),
            };
            push_signed(&mut out, i == 0, c.is_negative(), &body);
        }
        out.push_str("\\right]");
        return out;
    }
    for (i, t) in f.terms.iter().enumerate() {
        let amp = t.amplitude.abs();
        let body = match call(t) {
            None => amp.latex(),
            Some(s) if amp.as_rational().is_some_and(|r| r.is_one()) => s,
            Some(s) => format!("{}{s}", amp.latex()),
        };
        push_signed(&mut out, i == 0, t.amplitude.signum() < 0, &body);
    }
    out
}

fn push_signed(out: &mut String, first: bool, negative: bool, body: &str) {
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    out.push_str(body);
}

fn int_value(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(i.to_string()),
    }
}

#[derive(Debug, Serialize)]
pub struct AmplitudeJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub num: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub den: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surd: Option<u64>,
    pub label: String,
    pub numeric_string: String,
}

#[derive(Debug, Serialize)]
pub struct FrequencyJson {
    pub form: String,
    pub numeric_string: String,
}

#[derive(Debug, Serialize)]
pub struct TermJson {
    pub amplitude: AmplitudeJson,
    pub kind: TermKind,
    pub frequency: FrequencyJson,
}

#[derive(Debug, Serialize)]
pub struct SpecJson {
    pub family: SeriesFamily,
    pub p: u32,
    pub n: u32,
    /// θ/π as an exact fraction
    pub theta_over_pi: String,
    pub theta: String,
}

#[derive(Debug, Serialize)]
pub struct PredictedErrorJson {
    pub order: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_string: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff_exact: Option<String>,
}

/// Serialized shape of a formula.
#[derive(Debug, Serialize)]
pub struct FormulaJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub target_p: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<SpecJson>,
    pub terms: Vec<TermJson>,
    pub predicted_error: PredictedErrorJson,
    pub merged_numerically: bool,
}

impl From<&TrigFormula> for FormulaJson {
    fn from(f: &TrigFormula) -> Self {
        let prec = Precision::default();
        let terms = f
            .terms
            .iter()
            .map(|t| {
                let (num, den, surd) = match t.amplitude.as_scaled_surd() {
                    Some((n, d, s)) => {
                        (Some(int_value(&n)), Some(int_value(&d)), (s != 1).then_some(s))
                    }
                    None => (None, None, None),
                };
                TermJson {
                    amplitude: AmplitudeJson {
                        num,
                        den,
                        surd,
                        label: t.amplitude.text(),
                        numeric_string: t.amplitude.to_real(prec).to_sci_string(NUMERIC_DIGITS),
                    },
                    kind: t.kind,
                    frequency: FrequencyJson {
                        form: t.frequency.text(),
                        numeric_string: t.frequency.to_real(prec).to_sci_string(NUMERIC_DIGITS),
                    },
                }
            })
            .collect();
        let spec = f.spec.as_ref().map(|s| SpecJson {
            family: s.family,
            p: s.p.get(),
            n: s.n,
            theta_over_pi: s.theta.to_string(),
            theta: pi_multiple_text(&s.theta),
        });
        let pe = &f.predicted_error;
        FormulaJson {
            name: f.name.clone(),
            target_p: f.target.get(),
            spec,
            terms,
            predicted_error: PredictedErrorJson {
                order: pe.order,
                coeff_string: pe.coeff.as_ref().map(|c| c.to_real(prec).to_sci_string(20)),
                coeff_exact: pe.coeff.as_ref().map(|c| c.text()),
            },
            merged_numerically: f.merged_numerically,
        }
    }
}
