//! Closed form against brute force over parameter ranges and a θ grid.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::{Precision, Real};

use super::{closed_form, NodeTable, PowerSumQuery, SumFamily, Theta, MAX_K};

/// Inclusive integer range, written `a..b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub start: u32,
    pub end: u32,
}

impl ParamRange {
    pub fn new(start: u32, end: u32) -> Self {
        Self { start, end }
    }

    pub fn single(v: u32) -> Self {
        Self { start: v, end: v }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<u32> {
        self.start..=self.end
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("bad range {s:?}; expected a, a..b or a..=b"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        let r = match s.split_once("..") {
            Some((a, b)) => Self::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => Self::single(num(s)?),
        };
        if r.start > r.end {
            return Err(bad());
        }
        Ok(r)
    }
}

/// `None` selects the automatic range: every admissible `q`, and `k` up to
/// three bands.
#[derive(Debug, Clone)]
pub struct VerificationRanges {
    pub node: ParamRange,
    pub q: Option<ParamRange>,
    pub k: Option<ParamRange>,
}

#[derive(Debug, Clone)]
pub enum ThetaGrid {
    /// `θ_i = 2πi/points`, `i < points`
    Uniform(u32),
    Single(Theta),
}

impl ThetaGrid {
    fn thetas(&self) -> Vec<Theta> {
        match self {
            ThetaGrid::Uniform(t) => (0..*t)
                .map(|i| Theta::PiMultiple(BigRational::new(BigInt::from(2 * i), BigInt::from(*t))))
                .collect(),
            ThetaGrid::Single(th) => vec![th.clone()],
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FailureParams {
    pub node_param: u32,
    pub q: u32,
    pub k: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub params: FailureParams,
    pub theta: String,
    pub lhs: String,
    pub rhs: String,
    pub diff: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RangesJson {
    pub node_param: ParamRange,
    pub q: String,
    pub k: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub family: SumFamily,
    pub ranges: RangesJson,
    pub theta_points: usize,
    pub checked: u64,
    /// queries outside the family's precondition
    pub skipped: u64,
    pub tolerance: String,
    pub max_diff: String,
    pub failed: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Compares `closed_form` with `brute_force` for every query in the ranges
/// at every θ, to `10^(8 - digits)`.
pub fn verify(
    family: SumFamily,
    ranges: &VerificationRanges,
    grid: &ThetaGrid,
    prec: Precision,
) -> VerificationReport {
    let tol = Real::pow10(8 - prec.digits() as i64, prec);
    let thetas = grid.thetas();
    let sig = 20;
    let mut checked = 0u64;
    let mut skipped = 0u64;
    let mut failed = Vec::new();
    let mut max_diff = Real::zero(prec);

    for node in ranges.node.iter() {
        let qs: Vec<u32> = match (ranges.q, family.is_mixed()) {
            (Some(r), _) => r.iter().collect(),
            (None, false) => vec![0],
            (None, true) => match family.max_q(node) {
                Some(qmax) => (0..=qmax).collect(),
                None => Vec::new(),
            },
        };
        let ks: Vec<u32> = match ranges.k {
            Some(r) => r.iter().collect(),
            None => (0..=family.auto_k_max(node)).collect(),
        };
        for &q in &qs {
            let probe = PowerSumQuery::new(family, node, q, 0, Theta::zero());
            if probe.validate().is_err() {
                skipped += (ks.len() * thetas.len()) as u64;
                continue;
            }
            for theta in &thetas {
                let table = NodeTable::new(family, node, q, theta, prec);
                for &k in &ks {
                    if k > MAX_K {
                        skipped += 1;
                        continue;
                    }
                    let query = PowerSumQuery::new(family, node, q, k, theta.clone());
                    let cf = closed_form(&query).expect("validated query");
                    let rhs = cf.eval(theta, prec);
                    let lhs = table.value(k);
                    let diff = (&lhs - &rhs).abs();
                    checked += 1;
                    if diff > tol {
                        failed.push(Failure {
                            params: FailureParams { node_param: node, q, k },
                            theta: theta.text(),
                            lhs: lhs.to_sci_string(sig),
                            rhs: rhs.to_sci_string(sig),
                            diff: diff.to_sci_string(4),
                        });
                    }
                    if diff > max_diff {
                        max_diff = diff;
                    }
                }
            }
        }
    }

    let range_text = |r: Option<ParamRange>| match r {
        Some(r) if r.start == r.end => r.start.to_string(),
        Some(r) => format!("{}..{}", r.start, r.end),
        None => "auto".to_string(),
    };
    VerificationReport {
        family,
        ranges: RangesJson {
            node_param: ranges.node,
            q: if family.is_mixed() { range_text(ranges.q) } else { "0".into() },
            k: range_text(ranges.k),
        },
        theta_points: thetas.len(),
        checked,
        skipped,
        tolerance: tol.to_sci_string(3),
        max_diff: max_diff.to_sci_string(4),
        failed,
    }
}
