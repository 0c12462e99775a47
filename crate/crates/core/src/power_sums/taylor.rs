//! Maclaurin coefficients of trigonometric formulas.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::formula::{SeriesFamily, TermKind, TrigFormula};
use crate::oracle::factorial;
use crate::real::{Precision, Real};

use super::{closed_form, PowerSumQuery, SumFamily, Theta};

/// Largest power accepted by [`taylor_coeff_of_formula`].
pub const MAX_POWER: u32 = 100;

#[derive(Debug, Clone)]
pub enum TaylorCoeff {
    Exact(BigRational),
    Approx(Real),
}

impl TaylorCoeff {
    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            TaylorCoeff::Exact(r) => Some(r),
            TaylorCoeff::Approx(_) => None,
        }
    }

    pub fn to_real(&self, prec: Precision) -> Real {
        match self {
            TaylorCoeff::Exact(r) => Real::from_ratio(r, prec),
            TaylorCoeff::Approx(x) => x.with_precision(prec),
        }
    }
}

/// Coefficient of `x^power` in `Σ a·cos(ωx) + Σ b·sin(ωx)`.
///
/// For the cosine-node formulas the moment `Σ a·ω^power` is the power sum
/// over `(nθ + πℓ)/n`, taken from its closed form; otherwise it is computed
/// term by term in exact arithmetic. The result is exact whenever that
/// moment turns out rational.
pub fn taylor_coeff_of_formula(f: &TrigFormula, power: u32, prec: Precision) -> Result<TaylorCoeff> {
    if power > MAX_POWER {
        return Err(Error::InvalidArgument(format!("power {power} exceeds {MAX_POWER}")));
    }
    let kind = if power.is_multiple_of(2) { TermKind::Cos } else { TermKind::Sin };
    let moment = match &f.spec {
        Some(spec) if spec.family == SeriesFamily::CosineNodes && !f.merged_numerically => {
            if kind == TermKind::Sin {
                ExactReal::zero()
            } else {
                let turn = &spec.theta * BigRational::from_integer(BigInt::from(spec.n));
                let q = PowerSumQuery::new(
                    SumFamily::CosEvenHalf,
                    spec.n,
                    0,
                    power / 2,
                    Theta::PiMultiple(turn.clone()),
                );
                closed_form(&q)?.eval_exact(&turn)
            }
        }
        _ => f
            .terms
            .iter()
            .filter(|t| t.kind == kind)
            .fold(ExactReal::zero(), |acc, t| acc + &t.amplitude * &t.frequency.value().pow(power)),
    };
    // cos: (-1)^{P/2}/P!, sin: (-1)^{(P-1)/2}/P!
    let sign = if (power / 2) % 2 == 1 { -1 } else { 1 };
    let factor = BigRational::new(BigInt::from(sign), factorial(power));
    Ok(match moment.as_rational() {
        Some(r) => TaylorCoeff::Exact(r * factor),
        None => TaylorCoeff::Approx(moment.to_real(prec) * Real::from_ratio(&factor, prec)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{build_j0, build_j0_optimal, catalog, differentiate};
    use crate::oracle::{bessel_taylor_coeff, BesselOrder};
    use num_traits::{One, Zero};

    fn p50() -> Precision {
        Precision::default()
    }

    fn neglected(order: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(2u32).pow(order) * factorial(order))
    }

    #[test]
    fn four_nodes_second_power() {
        let f = build_j0(4, &BigRational::zero()).unwrap();
        let c = taylor_coeff_of_formula(&f, 2, p50()).unwrap();
        assert_eq!(c.exact(), Some(&BigRational::new((-1).into(), 4.into())));
    }

    #[test]
    fn optimal_three_nodes_twelfth_power() {
        let f = build_j0_optimal(3).unwrap();
        let c = taylor_coeff_of_formula(&f, 12, p50()).unwrap();
        let j = bessel_taylor_coeff(BesselOrder(0), 12).unwrap();
        // J0 - formula = 2 J_12 + ...
        assert_eq!(c.exact().unwrap(), &(j - neglected(12) * BigRational::from_integer(2.into())));
    }

    #[test]
    fn half_sum_twenty_fourth_power() {
        let f = catalog("eps24").unwrap();
        let c = taylor_coeff_of_formula(&f, 24, p50()).unwrap();
        let j = bessel_taylor_coeff(BesselOrder(0), 24).unwrap();
        assert_eq!(c.exact().unwrap(), &(j + neglected(24) * BigRational::from_integer(2.into())));
    }

    #[test]
    fn exact_route_agrees_with_closed_form_route() {
        // the catalog entry has no spec, so its moments are summed term by term
        let printed = catalog("J0n3opt").unwrap();
        let built = build_j0_optimal(3).unwrap();
        for p in [0, 2, 8, 12, 14] {
            let a = taylor_coeff_of_formula(&printed, p, p50()).unwrap();
            let b = taylor_coeff_of_formula(&built, p, p50()).unwrap();
            assert_eq!(a.exact(), b.exact(), "power {p}");
        }
    }

    #[test]
    fn odd_powers_of_sine_formulas() {
        let f = differentiate(&build_j0_optimal(2).unwrap()).unwrap();
        let c = taylor_coeff_of_formula(&f, 1, p50()).unwrap();
        assert_eq!(c.exact(), Some(&BigRational::new(1.into(), 2.into())));
        assert!(taylor_coeff_of_formula(&f, 101, p50()).is_err());
    }
}
