//! Named formulas, entered term by term in their printed form rather than
//! generated, so that agreement with the builders is a real check.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::oracle::BesselOrder;

use super::{
    differentiate, ApproxSpec, PredictedError, SeriesFamily, TermKind, TermSet, TrigFormula,
};

pub const CATALOG_NAMES: [&str; 12] = [
    "APP1", "APP2", "Fettis15", "J0n3opt", "eps24", "J0n6opt", "J1half24", "J2n6", "J2n8",
    "J4n8", "J3", "J5",
];

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn frac(n: i64, d: i64) -> ExactReal {
    ExactReal::fraction(n, d)
}

fn cos_pi(n: i64, d: i64) -> ExactReal {
    ExactReal::cos_pi(&ratio(n, d))
}

fn sin_pi(n: i64, d: i64) -> ExactReal {
    ExactReal::sin_pi(&ratio(n, d))
}

/// `(√3 ∓ 1)/(2√2)` written as `(√6 ∓ √2)/4`.
fn root_pair(plus: bool) -> ExactReal {
    let s = if plus {
        ExactReal::sqrt(6) + ExactReal::sqrt(2)
    } else {
        ExactReal::sqrt(6) - ExactReal::sqrt(2)
    };
    s.scale(&ratio(1, 4))
}

struct Entry {
    target: u32,
    set: TermSet,
}

impl Entry {
    fn new(target: u32) -> Self {
        Self { target, set: TermSet::new() }
    }

    fn cos(mut self, amp: ExactReal, freq: ExactReal) -> Self {
        self.set.push(TermKind::Cos, amp, freq);
        self
    }

    fn sin(mut self, amp: ExactReal, freq: ExactReal) -> Self {
        self.set.push(TermKind::Sin, amp, freq);
        self
    }

    /// Error `scale·J_order` from the first neglected term.
    fn finish(self, name: &str, order: u32, scale: ExactReal) -> TrigFormula {
        let (terms, merged) = self.set.finish();
        TrigFormula {
            name: Some(name.to_string()),
            target: BesselOrder(self.target),
            spec: None,
            terms,
            predicted_error: PredictedError::from_neglected(order, scale),
            merged_numerically: merged,
        }
    }
}

/// Looks up a named formula.
pub fn catalog(name: &str) -> Result<TrigFormula> {
    let one = || ExactReal::integer(1);
    let f = match name {
        "APP1" => Entry::new(0)
            .cos(frac(1, 4), ExactReal::zero())
            .cos(frac(1, 4), one())
            .cos(frac(1, 2), ExactReal::sqrt(2).scale(&ratio(1, 2)))
            .finish(name, 8, ExactReal::integer(-2)),
        "APP2" => app2().finish(name, 12, ExactReal::integer(-2)),
        "Fettis15" => {
            let mut e = Entry::new(0).cos(frac(1, 15), one());
            for k in 1..=7 {
                e = e.cos(frac(2, 15), cos_pi(k, 15));
            }
            e.finish(name, 30, ExactReal::integer(2))
        }
        "J0n3opt" => j0n3opt().finish(name, 12, ExactReal::integer(2)),
        "eps24" => eps24().finish(name, 24, ExactReal::integer(-2)),
        "J0n6opt" => {
            let mut e = Entry::new(0);
            for k in [1, 3, 5] {
                e = e.cos(frac(1, 6), cos_pi(k, 24)).cos(frac(1, 6), sin_pi(k, 24));
            }
            e.finish(name, 24, ExactReal::integer(2))
        }
        "J1half24" => {
            let mut f = differentiate(&eps24().finish("eps24", 24, ExactReal::integer(-2)))?;
            f.name = Some(name.to_string());
            f
        }
        "J2n6" => {
            let a = ExactReal::sqrt(3).scale(&ratio(1, 6));
            Entry::new(2)
                .cos(a.clone(), sin_pi(1, 12))
                .cos(-a, cos_pi(1, 12))
                .finish(name, 10, one())
        }
        "J2n8" => {
            let a = cos_pi(1, 8).scale(&ratio(1, 4));
            let b = sin_pi(1, 8).scale(&ratio(1, 4));
            Entry::new(2)
                .cos(a.clone(), sin_pi(1, 16))
                .cos(-a, cos_pi(1, 16))
                .cos(b.clone(), cos_pi(5, 16))
                .cos(-b, sin_pi(5, 16))
                .finish(name, 14, one())
        }
        "J4n8" => {
            let a = ExactReal::sqrt(2).scale(&ratio(1, 8));
            Entry::new(4)
                .cos(a.clone(), sin_pi(1, 16))
                .cos(a.clone(), cos_pi(1, 16))
                .cos(-a.clone(), sin_pi(5, 16))
                .cos(-a, cos_pi(5, 16))
                .finish(name, 12, one())
        }
        "J3" => {
            let a = ExactReal::sqrt(3).scale(&ratio(-1, 9));
            Entry::new(3)
                .sin(a.clone(), cos_pi(1, 18))
                .sin(-a.clone(), sin_pi(2, 9))
                .sin(-a, sin_pi(1, 9))
                .finish(name, 15, one())
        }
        "J5" => {
            let a = ExactReal::sqrt(3).scale(&ratio(1, 15));
            Entry::new(5)
                .sin(a.clone(), cos_pi(1, 30))
                .sin(a.clone(), sin_pi(1, 15))
                .sin(-a.clone(), ExactReal::sqrt(3).scale(&ratio(1, 2)))
                .sin(-a.clone(), sin_pi(4, 15))
                // printed as cos(2π/15); the generating sum gives sin(2π/15)
                .sin(a, sin_pi(2, 15))
                .finish(name, 25, one())
        }
        _ => {
            return Err(Error::UnknownName(format!(
                "no catalog formula named {name:?}; known: {}",
                CATALOG_NAMES.join(", ")
            )))
        }
    };
    Ok(f)
}

fn app2() -> Entry {
    Entry::new(0)
        .cos(frac(1, 6), ExactReal::zero())
        .cos(frac(1, 6), ExactReal::integer(1))
        .cos(frac(1, 3), frac(1, 2))
        .cos(frac(1, 3), ExactReal::sqrt(3).scale(&ratio(1, 2)))
}

fn j0n3opt() -> Entry {
    Entry::new(0)
        .cos(frac(1, 3), ExactReal::sqrt(2).scale(&ratio(1, 2)))
        .cos(frac(1, 3), root_pair(false))
        .cos(frac(1, 3), root_pair(true))
}

/// Half-sum of APP2 and J0n3opt.
fn eps24() -> Entry {
    Entry::new(0)
        .cos(frac(1, 12), ExactReal::zero())
        .cos(frac(1, 12), ExactReal::integer(1))
        .cos(frac(1, 6), frac(1, 2))
        .cos(frac(1, 6), ExactReal::sqrt(3).scale(&ratio(1, 2)))
        .cos(frac(1, 6), ExactReal::sqrt(2).scale(&ratio(1, 2)))
        .cos(frac(1, 6), root_pair(false))
        .cos(frac(1, 6), root_pair(true))
}

/// The builder parameters that reproduce a catalog entry, where one exists.
pub fn catalog_equivalent(name: &str) -> Option<ApproxSpec> {
    let nodes = |n: u32, theta: BigRational| ApproxSpec {
        p: BesselOrder(0),
        n,
        theta,
        family: SeriesFamily::CosineNodes,
    };
    let shifted = |p: u32, n: u32| ApproxSpec {
        p: BesselOrder(p),
        n,
        theta: ratio(1, 2 * n as i64),
        family: SeriesFamily::PhaseShifted,
    };
    let odd = |n: u32| ApproxSpec {
        p: BesselOrder(2 * n + 1),
        n,
        theta: ratio(1, 6),
        family: SeriesFamily::OddOrder,
    };
    Some(match name {
        "APP1" => nodes(4, ratio(0, 1)),
        "APP2" => nodes(6, ratio(0, 1)),
        "Fettis15" => nodes(15, ratio(0, 1)),
        "eps24" => nodes(12, ratio(0, 1)),
        "J0n3opt" => nodes(3, ratio(1, 12)),
        "J0n6opt" => nodes(6, ratio(1, 24)),
        "J2n6" => shifted(2, 6),
        "J2n8" => shifted(2, 8),
        "J4n8" => shifted(4, 8),
        "J3" => odd(1),
        "J5" => odd(2),
        _ => return None,
    })
}
