//! Formulas generated by truncating Neumann-type expansions of
//! `cos(x sin φ)` and `cos(x cos φ)` at equally spaced angles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::exact::ExactReal;
use crate::oracle::BesselOrder;

use super::{ApproxSpec, PredictedError, SeriesFamily, TermKind, TermSet, TrigFormula};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

/// `J_0(x) ≈ (1/n) Σ_{ℓ<n} cos[x cos(θ + πℓ/n)]` with `theta` a multiple of π.
pub fn build_j0(n: u32, theta: &BigRational) -> Result<TrigFormula> {
    let spec = ApproxSpec {
        p: BesselOrder(0),
        n,
        theta: theta.clone(),
        family: SeriesFamily::CosineNodes,
    };
    spec.validate()?;

    let weight = ExactReal::fraction(1, n as i64);
    let mut set = TermSet::new();
    for l in 0..n {
        let turn = theta + ratio(l as i64, n as i64);
        set.push(TermKind::Cos, weight.clone(), ExactReal::cos_pi(&turn));
    }
    let (terms, merged) = set.finish();

    // ε = -2 Σ_{k≥1} (-1)^{kn} cos(2knθ) J_{2kn}(x); cos(2nθ) and cos(4nθ)
    // cannot both vanish, so k ≤ 2
    let mut predicted = None;
    for k in 1..=2u32 {
        let order = 2 * k * n;
        let c = ExactReal::cos_pi(&(theta * BigRational::from_integer(BigInt::from(order))));
        if !c.is_zero() {
            let scale = c.scale(&BigRational::from_integer(BigInt::from(-2 * sign((k * n) % 2 == 1))));
            predicted = Some(PredictedError::from_neglected(order, scale));
            break;
        }
    }
    let predicted_error = predicted.expect("cos(2nθ) and cos(4nθ) never vanish together");

    Ok(TrigFormula {
        name: None,
        target: BesselOrder(0),
        spec: Some(spec),
        terms,
        predicted_error,
        merged_numerically: merged,
    })
}

/// [`build_j0`] at `θ = π/(4n)`, which cancels the first neglected term.
pub fn build_j0_optimal(n: u32) -> Result<TrigFormula> {
    let theta = if n == 0 { BigRational::zero() } else { ratio(1, 4 * n as i64) };
    build_j0(n, &theta)
}

/// `J_p(x) ≈ (1/n) Σ_{ℓ<n} cos(x sin φ_ℓ - p φ_ℓ)` at `φ_ℓ = (1 + 4ℓ)π/(2n)`,
/// valid for `2p <= n`.
pub fn build_jp(p: u32, n: u32) -> Result<TrigFormula> {
    let spec = ApproxSpec {
        p: BesselOrder(p),
        n,
        theta: ratio(1, 2 * n.max(1) as i64),
        family: SeriesFamily::PhaseShifted,
    };
    spec.validate()?;

    let mut set = TermSet::new();
    for l in 0..n {
        let phi = ratio(1 + 4 * l as i64, 2 * n as i64);
        let p_phi = &phi * BigRational::from_integer(BigInt::from(p));
        let w = ratio(1, n as i64);
        let freq = ExactReal::sin_pi(&phi);
        // cos(x sinφ - pφ) = cos(pφ) cos(x sinφ) + sin(pφ) sin(x sinφ)
        set.push(TermKind::Cos, ExactReal::cos_pi(&p_phi).scale(&w), freq.clone());
        set.push(TermKind::Sin, ExactReal::sin_pi(&p_phi).scale(&w), freq);
    }
    let (terms, merged) = set.finish();

    // the first neglected pair is J_{2n+p} + (-1)^p J_{2n-p}
    let predicted_error = if p == 0 {
        PredictedError::from_neglected(2 * n, ExactReal::integer(2))
    } else {
        PredictedError::from_neglected(2 * n - p, ExactReal::integer(sign(p % 2 == 1)))
    };

    Ok(TrigFormula {
        name: None,
        target: BesselOrder(p),
        spec: Some(spec),
        terms,
        predicted_error,
        merged_numerically: merged,
    })
}

/// `J_{2n+1}(x) ≈ (-1)^n/(√3 (2n+1)) Σ_{ℓ≤2n} sin[x cos((1 + 12ℓ)π/(12n + 6))]`.
pub fn build_odd_order(n: u32) -> Result<TrigFormula> {
    let big_n = 2 * n + 1;
    let spec = ApproxSpec {
        p: BesselOrder(big_n),
        n,
        theta: ratio(1, 6),
        family: SeriesFamily::OddOrder,
    };
    spec.validate()?;

    // 1/√3 = √3/3
    let amp = ExactReal::sqrt(3).scale(&ratio(sign(n % 2 == 1), 3 * big_n as i64));
    let mut set = TermSet::new();
    for l in 0..big_n {
        let turn = ratio(1 + 12 * l as i64, 12 * n as i64 + 6);
        set.push(TermKind::Sin, amp.clone(), ExactReal::cos_pi(&turn));
    }
    let (terms, merged) = set.finish();

    Ok(TrigFormula {
        name: None,
        target: BesselOrder(big_n),
        spec: Some(spec),
        terms,
        predicted_error: PredictedError::from_neglected(5 * big_n, ExactReal::integer(1)),
        merged_numerically: merged,
    })
}
