use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use besseltrig::error_lab::spot_error;
use besseltrig::formula::{
    build_j0, build_j0_optimal, build_jp, build_odd_order, catalog, catalog_equivalent, differentiate,
    ApproxSpec, OutputFormat, SeriesFamily, TermKind, TrigFormula, CATALOG_NAMES,
};
use besseltrig::oracle::{bessel_j, BesselOrder};
use besseltrig::real::{Precision, Real};

fn p30() -> Precision {
    Precision::new(30).unwrap()
}

fn from_spec(spec: &ApproxSpec) -> TrigFormula {
    match spec.family {
        SeriesFamily::CosineNodes => build_j0(spec.n, &spec.theta).unwrap(),
        SeriesFamily::PhaseShifted => build_jp(spec.p.get(), spec.n).unwrap(),
        SeriesFamily::OddOrder => build_odd_order(spec.n).unwrap(),
        SeriesFamily::Named => unreachable!(),
    }
}

#[test]
fn catalog_entries_agree_with_builders_at_twenty_points() {
    let prec = p30();
    let tol = Real::pow10(-25, prec);
    for name in CATALOG_NAMES {
        let printed = catalog(name).unwrap();
        let built = match name {
            // the J1 entry is the derivative of the 24th-order half sum
            "J1half24" => differentiate(&catalog("eps24").unwrap()).unwrap(),
            _ => from_spec(&catalog_equivalent(name).unwrap()),
        };
        for i in 0..20 {
            // scattered over (0, 20)
            let x = Real::from_ratio(&BigRational::new(BigInt::from(37 * i + 11), BigInt::from(37)), prec);
            let d = (printed.eval(&x, prec) - built.eval(&x, prec)).abs();
            assert!(d < tol, "{name} at point {i}: {d}");
        }
    }
}

#[test]
fn values_at_origin() {
    let prec = p30();
    let zero = Real::zero(prec);
    for name in CATALOG_NAMES {
        let f = catalog(name).unwrap();
        let want = if f.target.get() == 0 { Real::one(prec) } else { Real::zero(prec) };
        assert!((f.eval(&zero, prec) - want).abs() < Real::pow10(-28, prec), "{name}");
    }
}

#[test]
fn phase_shifted_formulas_have_the_parity_of_their_order() {
    let prec = p30();
    for (p, n) in [(1, 4), (2, 6), (3, 7), (4, 8), (5, 12)] {
        let f = build_jp(p, n).unwrap();
        let want = if p % 2 == 0 { TermKind::Cos } else { TermKind::Sin };
        assert!(f.terms.iter().all(|t| t.kind == want), "p={p} n={n}: {}", f.emit(OutputFormat::Text));
        let x = Real::parse_decimal("1.7", prec).unwrap();
        let mx = Real::zero(prec) - &x;
        let sign = if p % 2 == 0 { Real::one(prec) } else { Real::from_i64(-1, prec) };
        assert!((f.eval(&mx, prec) - sign * f.eval(&x, prec)).abs() < Real::pow10(-28, prec));
    }
}

#[test]
fn derivative_of_j0_formula_approximates_j1() {
    let prec = p30();
    let f = differentiate(&build_j0_optimal(6).unwrap()).unwrap();
    assert_eq!(f.target, BesselOrder(1));
    assert_eq!(f.predicted_error.order, 23);
    let x = Real::from_i64(3, prec);
    assert!(spot_error(&f, &x, prec).unwrap().abs().to_f64() < 1e-12);
}

#[test]
fn emission_is_deterministic() {
    for name in CATALOG_NAMES {
        let f = catalog(name).unwrap();
        for fmt in [OutputFormat::Text, OutputFormat::Latex, OutputFormat::Json] {
            assert_eq!(f.emit(fmt), catalog(name).unwrap().emit(fmt));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cosine_nodes_error_order_is_2n_or_4n(n in 1u32..12, num in 0i64..=16) {
        let theta = BigRational::new(BigInt::from(num), BigInt::from(32));
        let f = build_j0(n, &theta).unwrap();
        let order = f.predicted_error.order;
        prop_assert!(order == 2 * n || order == 4 * n);
        // cos(2nθ) vanishes iff 2nθ/π ≡ 1/2 (mod 1)
        prop_assert_eq!(order == 4 * n, num * 2 * n as i64 % 32 == 16);
    }

    #[test]
    fn terms_are_sorted_and_unique(n in 1u32..10, num in 0i64..=8) {
        let f = build_j0(n, &BigRational::new(BigInt::from(num), BigInt::from(16))).unwrap();
        let prec = p30();
        let freqs: Vec<f64> = f.terms.iter().map(|t| t.frequency.to_real(prec).to_f64()).collect();
        let constants = f.terms.iter().take_while(|t| t.is_constant()).count();
        prop_assert!(constants <= 1);
        for w in freqs[constants..].windows(2) {
            prop_assert!(w[0] >= w[1]);
        }
    }

    #[test]
    fn near_origin_the_error_follows_the_predicted_law(n in 1u32..5, p in 0u32..3) {
        prop_assume!(2 * p <= n);
        let prec = Precision::new(60).unwrap();
        let f = build_jp(p, n).unwrap();
        let x = Real::parse_decimal("0.125", prec).unwrap();
        let eps = spot_error(&f, &x, prec).unwrap();
        let coeff = f.predicted_error.coeff.as_ref().unwrap().to_real(prec);
        let predicted = coeff * x.powi(f.predicted_error.order);
        let rel = ((eps - &predicted) / predicted).abs().to_f64();
        prop_assert!(rel < 0.01, "rel {}", rel);
    }

    #[test]
    fn optimal_angle_error_is_bounded_by_first_neglected_term(n in 1u32..6, xi in 1i64..40) {
        // ε = 2 J_{4n} - 2 J_{8n} + ... and 0 < J_{4n}(x) < (x/2)^{4n}/(4n)! for small x
        let prec = p30();
        let f = build_j0_optimal(n).unwrap();
        let x = Real::from_ratio(&BigRational::new(BigInt::from(xi), BigInt::from(20)), prec);
        let j = bessel_j(BesselOrder(0), &x, prec).unwrap();
        let eps = j - f.eval(&x, prec);
        let floor = Real::pow10(-27, prec);
        let bound = f.predicted_error.coeff.as_ref().unwrap().to_real(prec) * x.powi(4 * n);
        prop_assert!(eps > Real::zero(prec) - &floor);
        prop_assert!(eps <= bound + floor);
    }
}
