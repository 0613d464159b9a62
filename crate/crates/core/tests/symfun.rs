use num_bigint::BigInt;
use proptest::prelude::*;

use spin_nilhecke::poly::{parse_polynomial, Even, Spin};
use spin_nilhecke::series::GradedRankSeries;
use spin_nilhecke::symfun::{
    elementary, express_in_elementary, expression_string, generator_degrees, hilbert_closed_form,
    hilbert_series, in_lambda, lambda_dimension, GeneratorExpression, LambdaElement,
};
use spin_nilhecke::weyl::WeylType;
use spin_nilhecke::{Monomial, Polynomial, Scalar, Variant};

fn expression(rank: usize) -> impl Strategy<Value = GeneratorExpression> {
    prop::collection::vec((prop::collection::vec(0u32..=2, rank), -3i64..=3), 0..5).prop_map(
        move |terms| {
            GeneratorExpression::from_terms(
                rank,
                terms
                    .into_iter()
                    .map(|(e, c)| (e, Scalar::from_integer(BigInt::from(c)))),
            )
        },
    )
}

#[test]
fn generator_degrees_by_type() {
    assert_eq!(
        generator_degrees(Variant::Spin, WeylType::B, 3).unwrap(),
        vec![2, 4, 6]
    );
    assert_eq!(
        generator_degrees(Variant::Spin, WeylType::D, 3).unwrap(),
        vec![2, 4, 3]
    );
    assert_eq!(
        generator_degrees(Variant::Even, WeylType::A, 3).unwrap(),
        vec![1, 2, 3]
    );
    assert!(generator_degrees(Variant::Spin, WeylType::A, 3).is_err());
}

#[test]
fn membership_examples() {
    let top = parse_polynomial::<Spin>("x1*x2*x3", Some(3)).unwrap();
    assert!(in_lambda(WeylType::D, 3, &top).unwrap().is_member());
    assert!(!in_lambda(WeylType::B, 3, &top).unwrap().is_member());
    let x1 = parse_polynomial::<Spin>("x1", Some(2)).unwrap();
    let m = in_lambda(WeylType::B, 2, &x1).unwrap();
    assert_eq!(m.witness().map(|(i, _)| i), Some(1));
    for k in 1..=3 {
        let e: Polynomial<Scalar, Spin> = elementary(WeylType::B, 3, k).unwrap();
        assert!(in_lambda(WeylType::B, 3, &e).unwrap().is_member());
    }
}

#[test]
fn expressing_products_of_generators() {
    let f = parse_polynomial::<Spin>("x1^2*x2^2", Some(2)).unwrap();
    let l = LambdaElement::new(WeylType::B, 2, f).unwrap();
    assert_eq!(l.to_string(), "e2");
    let f = parse_polynomial::<Spin>("x1^4 + x2^4", Some(2)).unwrap();
    let e = express_in_elementary(WeylType::B, 2, &f).unwrap();
    assert_eq!(expression_string(&e), "e1^2 - 2*e2");
    let sq = parse_polynomial::<Spin>("x1^2*x2^2", Some(2)).unwrap();
    let e = express_in_elementary(WeylType::D, 2, &sq).unwrap();
    // (x1*x2)^2 = -x1^2*x2^2
    assert_eq!(expression_string(&e), "-e2^2");
    assert!(LambdaElement::new(
        WeylType::B,
        2,
        parse_polynomial::<Spin>("x1", Some(2)).unwrap()
    )
    .is_err());
}

#[test]
fn hilbert_series_match_closed_forms() {
    for (variant, ty, n) in [
        (Variant::Spin, WeylType::B, 2),
        (Variant::Spin, WeylType::B, 3),
        (Variant::Spin, WeylType::D, 2),
        (Variant::Spin, WeylType::D, 3),
        (Variant::Spin, WeylType::D, 4),
        (Variant::Even, WeylType::A, 3),
        (Variant::Even, WeylType::B, 2),
    ] {
        let a = hilbert_series(variant, ty, n, 24).unwrap().at_pi_one();
        let b = hilbert_closed_form(variant, ty, n, 24).unwrap();
        assert!(a.agrees_to(&b, 24), "{variant} {ty}{n}: {a} vs {b}");
    }
}

#[test]
fn kernel_dimensions_match_the_hilbert_series() {
    let s: GradedRankSeries = hilbert_series(Variant::Spin, WeylType::D, 3, 24)
        .unwrap()
        .at_pi_one();
    for d in 0..=12u32 {
        let dim = lambda_dimension::<Spin>(WeylType::D, 3, d).unwrap();
        assert_eq!(
            BigInt::from(dim),
            s.coeff(2 * i64::from(d), 0),
            "degree {d}"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn express_after_expand_is_the_identity_b3(e in expression(3)) {
        let f = spin_nilhecke::symfun::expand::<Spin>(WeylType::B, 3, &e).unwrap();
        prop_assert!(in_lambda(WeylType::B, 3, &f).unwrap().is_member());
        prop_assert_eq!(express_in_elementary(WeylType::B, 3, &f).unwrap(), e);
    }

    #[test]
    fn express_after_expand_is_the_identity_d3(e in expression(3)) {
        let f = spin_nilhecke::symfun::expand::<Spin>(WeylType::D, 3, &e).unwrap();
        prop_assert!(in_lambda(WeylType::D, 3, &f).unwrap().is_member());
        prop_assert_eq!(express_in_elementary(WeylType::D, 3, &f).unwrap(), e);
    }

    #[test]
    fn express_after_expand_is_the_identity_even_a3(e in expression(3)) {
        let f = spin_nilhecke::symfun::expand::<Even>(WeylType::A, 3, &e).unwrap();
        prop_assert_eq!(express_in_elementary(WeylType::A, 3, &f).unwrap(), e);
    }

    #[test]
    fn generators_commute_with_everything(
        k in 1usize..=3,
        e in prop::collection::vec(0u32..=3, 3),
    ) {
        let g: Polynomial<Scalar, Spin> = elementary(WeylType::B, 3, k).unwrap();
        let m = Polynomial::<Scalar, Spin>::monomial(Monomial(e));
        prop_assert_eq!(g.mul(&m), m.mul(&g));
    }
}
