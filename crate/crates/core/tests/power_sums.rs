use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use besseltrig::power_sums::{
    binom, brute_force, closed_form, verify, ParamRange, PowerSumQuery, SumFamily, Theta, ThetaGrid,
    VerificationRanges, ALL_FAMILIES,
};
use besseltrig::real::{Precision, Real};

fn turn(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn cos_power_special_angles() {
    // (1/n) Σ cos^{2n}((1+6ℓ)π/6n) = 4^-n [C(2n,n) + 1]
    // (1/n) Σ cos^{4n}((1+4ℓ)π/4n) = 16^-n [C(4n,2n) - 2]
    for n in 1..=10u32 {
        let q = PowerSumQuery::new(SumFamily::CosEvenHalf, n, 0, n, Theta::PiMultiple(turn(1, 6)));
        let v = closed_form(&q).unwrap().eval_rational(&turn(1, 6)).unwrap();
        assert_eq!(v, BigRational::new(binom(2 * n, n as i64) + 1, BigInt::from(4).pow(n)));
        let q = PowerSumQuery::new(SumFamily::CosEvenHalf, n, 0, 2 * n, Theta::PiMultiple(turn(1, 4)));
        let v = closed_form(&q).unwrap().eval_rational(&turn(1, 4)).unwrap();
        assert_eq!(v, BigRational::new(binom(4 * n, 2 * n as i64) - 2, BigInt::from(16).pow(n)));
    }
}

#[test]
fn below_threshold_sums_are_theta_free() {
    let prec = Precision::new(30).unwrap();
    for k in 0..4 {
        let q = PowerSumQuery::new(SumFamily::CosEvenHalf, 4, 0, k, Theta::zero());
        let cf = closed_form(&q).unwrap();
        assert!(cf.bands.is_empty());
        for th in ["0.3", "1.1", "2.9"] {
            let q = PowerSumQuery::new(SumFamily::CosEvenHalf, 4, 0, k, Theta::parse(th, prec).unwrap());
            let d = brute_force(&q, prec).unwrap() - cf.eval(&q.theta, prec);
            assert!(d.abs() < Real::pow10(-25, prec));
        }
    }
}

#[test]
fn every_family_verifies_at_an_irrational_angle() {
    let prec = Precision::new(40).unwrap();
    let theta = Theta::parse("0.7", prec).unwrap();
    for f in ALL_FAMILIES {
        let ranges = VerificationRanges { node: ParamRange::new(1, 4), q: None, k: None };
        let r = verify(f, &ranges, &ThetaGrid::Single(theta.clone()), prec);
        assert!(r.passed(), "{f}: {:?}", r.failed.first());
    }
}

#[test]
fn out_of_range_queries_are_rejected() {
    let q = PowerSumQuery::new(SumFamily::MixEvenOdd, 2, 2, 3, Theta::zero());
    assert!(closed_form(&q).is_err());
    let q = PowerSumQuery::new(SumFamily::CosEvenHalf, 2, 0, 101, Theta::zero());
    assert!(closed_form(&q).is_err());
    let q = PowerSumQuery::new(SumFamily::CosEvenHalf, 2, 1, 3, Theta::zero());
    assert!(closed_form(&q).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_matches_direct_sum(
        fi in 0usize..ALL_FAMILIES.len(),
        node in 1u32..7,
        q in 0u32..4,
        k in 0u32..30,
        num in -24i64..24,
    ) {
        let family = ALL_FAMILIES[fi];
        let q = if family.is_mixed() { q } else { 0 };
        let query = PowerSumQuery::new(family, node, q, k, Theta::PiMultiple(turn(num, 24)));
        prop_assume!(query.validate().is_ok());
        let prec = Precision::new(40).unwrap();
        let cf = closed_form(&query).unwrap();
        let d = brute_force(&query, prec).unwrap() - cf.eval(&query.theta, prec);
        prop_assert!(d.abs() < Real::pow10(-32, prec), "{} {:?}", family, query);
        // exact evaluation agrees with the floating one
        let exact = cf.eval_exact(&turn(num, 24)).to_real(prec);
        prop_assert!((exact - cf.eval(&query.theta, prec)).abs() < Real::pow10(-32, prec));
    }
}
