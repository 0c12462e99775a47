//! Measures `ε(x) = J_p(x) - formula(x)` against the series oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::TrigFormula;
use crate::oracle::{bessel_j, bessel_zero};
use crate::real::{parse_decimal_ratio, ratio_to_decimal_string, Precision, Real};
use crate::roots;

/// Tolerances reported by default in [`ErrorReport::domains`].
pub const DEFAULT_TOLERANCES: [f64; 4] = [1e-3, 1e-6, 1e-9, 1e-12];

/// Significant digits of CSV fields.
pub const CSV_MAX_DIGITS: u32 = 17;

/// Fit abscissae: `ε(1/4)` and `ε(1/2)`.
const FIT_X0: (i64, i64) = (1, 2);
const FIT_X1: (i64, i64) = (1, 4);

/// `ε ≈ coeff · x^order` near the origin.
#[derive(Debug, Clone)]
pub struct LeadingOrder {
    pub order: i32,
    pub coeff: Real,
}

#[derive(Debug, Clone)]
pub struct ErrorReport {
    pub formula_id: String,
    pub target: u32,
    pub precision: Precision,
    pub grid: Vec<BigRational>,
    pub approx: Vec<Real>,
    pub reference: Vec<Real>,
    pub eps: Vec<Real>,
    pub max_abs_eps: Real,
    /// `None` when ε is too small to fit at this precision.
    pub fit: Option<LeadingOrder>,
}

impl ErrorReport {
    /// Largest grid point `x` such that `|ε| <= tol` at every grid point up
    /// to and including `x`; 0 when the first point already fails.
    pub fn domain_for(&self, tol: f64) -> BigRational {
        let tol = Real::from_f64(tol, self.precision);
        let mut last = BigRational::zero();
        for (x, e) in self.grid.iter().zip(&self.eps) {
            if e.abs() > tol {
                break;
            }
            last = x.clone();
        }
        last
    }

    /// `(tol, domain_for(tol))` for each of [`DEFAULT_TOLERANCES`].
    pub fn domains(&self) -> Vec<(f64, BigRational)> {
        DEFAULT_TOLERANCES.iter().map(|&t| (t, self.domain_for(t))).collect()
    }

    /// `x,approx,reference,error` rows; `x` is exact, the rest carry
    /// `min(digits, 17)` significant digits.
    pub fn to_csv(&self) -> String {
        let sig = self.precision.digits().min(CSV_MAX_DIGITS) as usize;
        let mut out = String::from("x,approx,reference,error\n");
        for i in 0..self.grid.len() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                ratio_to_decimal_string(&self.grid[i]),
                self.approx[i].to_sci_string(sig),
                self.reference[i].to_sci_string(sig),
                self.eps[i].to_sci_string(sig),
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let sig = self.precision.digits().min(CSV_MAX_DIGITS) as usize;
        let rows: Vec<_> = (0..self.grid.len())
            .map(|i| RowJson {
                x: ratio_to_decimal_string(&self.grid[i]),
                approx: self.approx[i].to_sci_string(sig),
                reference: self.reference[i].to_sci_string(sig),
                error: self.eps[i].to_sci_string(sig),
            })
            .collect();
        let domains: Vec<_> = self
            .domains()
            .into_iter()
            .map(|(tol, x)| DomainJson { tol: format!("{tol:e}"), x: ratio_to_decimal_string(&x) })
            .collect();
        serde_json::to_value(ReportJson {
            formula: self.formula_id.clone(),
            target_p: self.target,
            precision: self.precision.digits(),
            max_abs_eps: self.max_abs_eps.to_sci_string(sig),
            fitted_order: self.fit.as_ref().map(|f| f.order),
            fitted_coeff: self.fit.as_ref().map(|f| f.coeff.to_sci_string(sig)),
            domains,
            rows,
        })
        .expect("report serializes")
    }
}

#[derive(Serialize)]
struct RowJson {
    x: String,
    approx: String,
    reference: String,
    error: String,
}

#[derive(Serialize)]
struct DomainJson {
    tol: String,
    x: String,
}

#[derive(Serialize)]
struct ReportJson {
    formula: String,
    target_p: u32,
    precision: u32,
    max_abs_eps: String,
    fitted_order: Option<i32>,
    fitted_coeff: Option<String>,
    domains: Vec<DomainJson>,
    rows: Vec<RowJson>,
}

/// Sweeps `ε` over `step, 2·step, … <= x_max`.
pub fn sweep(
    f: &TrigFormula,
    x_max: &BigRational,
    step: &BigRational,
    prec: Precision,
) -> Result<ErrorReport> {
    if !step.is_positive() || step >= x_max {
        return Err(Error::InvalidArgument(format!(
            "sweep requires 0 < step < x_max, got step = {} and x_max = {}",
            ratio_to_decimal_string(step),
            ratio_to_decimal_string(x_max)
        )));
    }
    let resolved = f.resolve(prec);
    let mut grid = Vec::new();
    let mut approx = Vec::new();
    let mut reference = Vec::new();
    let mut eps = Vec::new();
    let mut max_abs = Real::zero(prec);
    let mut k = BigInt::from(1);
    loop {
        let xr = step * BigRational::from_integer(k.clone());
        if &xr > x_max {
            break;
        }
        let x = Real::from_ratio(&xr, prec);
        let a = resolved.eval(&x);
        let j = bessel_j(f.target, &x, prec)?;
        let e = &j - &a;
        max_abs = max_abs.max(e.abs());
        grid.push(xr);
        approx.push(a);
        reference.push(j);
        eps.push(e);
        k += 1;
    }
    let fit = match fit_leading_order(f, prec) {
        Ok(fit) => Some(fit),
        Err(Error::Precision(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(ErrorReport {
        formula_id: f.id(),
        target: f.target.get(),
        precision: prec,
        grid,
        approx,
        reference,
        eps,
        max_abs_eps: max_abs,
        fit,
    })
}

/// `ε(x)` at one point.
pub fn spot_error(f: &TrigFormula, x: &Real, prec: Precision) -> Result<Real> {
    let x = x.with_precision(prec);
    let j = bessel_j(f.target, &x, prec)?;
    Ok(j - f.eval(&x, prec))
}

/// Order from the slope of `log|ε|` between `x = 1/4` and `x = 1/2`,
/// coefficient `ε(1/2) · 2^order`.
pub fn fit_leading_order(f: &TrigFormula, prec: Precision) -> Result<LeadingOrder> {
    let x0 = Real::from_ratio(&BigRational::new(FIT_X0.0.into(), FIT_X0.1.into()), prec);
    let x1 = Real::from_ratio(&BigRational::new(FIT_X1.0.into(), FIT_X1.1.into()), prec);
    let e0 = spot_error(f, &x0, prec)?;
    let e1 = spot_error(f, &x1, prec)?;

    // ε is a difference of O(1) quantities, so its noise floor is a few ulps
    // of the amplitude sum
    let scale = f.amplitude_norm(prec).max(Real::one(prec));
    let floor = scale * Real::pow10(1 - prec.digits() as i64, prec);
    for (x, e) in [("1/2", &e0), ("1/4", &e1)] {
        if e.abs() <= floor {
            return Err(Error::Precision(format!(
                "|ε({x})| = {} is below the resolution of {} digits",
                e.abs().to_sci_string(3),
                prec.digits()
            )));
        }
    }
    if e0.signum() != e1.signum() {
        return Err(Error::Precision("ε changes sign between 1/4 and 1/2; no clean power law".into()));
    }
    let ratio = (e0.abs() / e1.abs()).to_f64();
    let order = ratio.log2().round() as i32;
    let coeff = if order >= 0 {
        &e0 * Real::from_i64(2, prec).powi(order as u32)
    } else {
        e0 / Real::from_i64(2, prec).powi((-order) as u32)
    };
    Ok(LeadingOrder { order, coeff })
}

#[derive(Debug, Clone)]
pub struct ZeroReport {
    pub formula_id: String,
    pub zero_index: u32,
    pub location: Real,
    pub reference: Real,
    pub discrepancy: Real,
}

impl ZeroReport {
    pub fn to_json(&self, sig: usize) -> serde_json::Value {
        serde_json::json!({
            "formula": self.formula_id,
            "zero_index": self.zero_index,
            "location": self.location.to_sci_string(sig),
            "reference": self.reference.to_sci_string(sig),
            "discrepancy": self.discrepancy.to_sci_string(sig.min(6)),
        })
    }
}

/// First positive zero of the formula on `(0, 12]`.
pub fn first_zero(f: &TrigFormula, prec: Precision) -> Result<ZeroReport> {
    let mut zs = zeros_up_to(f, 1, &BigRational::from_integer(12.into()), prec)?;
    Ok(zs.remove(0))
}

/// The first `count` positive zeros of the formula below 60, each paired
/// with the matching oracle zero.
pub fn zeros(f: &TrigFormula, count: u32, prec: Precision) -> Result<Vec<ZeroReport>> {
    if count == 0 {
        return Err(Error::InvalidArgument("zero count must be positive".into()));
    }
    let end = BigRational::from_integer(crate::oracle::MAX_ARGUMENT.into());
    zeros_up_to(f, count, &end, prec)
}

fn zeros_up_to(
    f: &TrigFormula,
    count: u32,
    end: &BigRational,
    prec: Precision,
) -> Result<Vec<ZeroReport>> {
    let resolved = f.resolve(prec);
    let g = |x: &Real| Ok(resolved.eval(x));
    let step = BigRational::new(1.into(), 20.into());
    let brackets = roots::scan_sign_changes(g, &step, end, count as usize, prec)?;
    if brackets.len() < count as usize {
        return Err(Error::NoSignChange(format!(
            "{} changes sign only {} time(s) on (0, {}]",
            f.id(),
            brackets.len(),
            ratio_to_decimal_string(end)
        )));
    }
    let tol = roots::zero_tolerance(prec);
    let mut out = Vec::with_capacity(brackets.len());
    for (i, b) in brackets.iter().enumerate() {
        let index = i as u32 + 1;
        let location = roots::bisect(g, b, &tol, prec)?;
        let reference = bessel_zero(f.target, index, prec)?;
        let discrepancy = &location - &reference;
        out.push(ZeroReport { formula_id: f.id(), zero_index: index, location, reference, discrepancy });
    }
    Ok(out)
}

/// Parses a non-negative decimal such as `0.01` into an exact ratio.
pub fn parse_grid_value(s: &str) -> Result<BigRational> {
    parse_decimal_ratio(s)
}
