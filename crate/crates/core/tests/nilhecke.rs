use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use spin_nilhecke::expr::parse_operator;
use spin_nilhecke::nilhecke::{
    graded_rank, graded_rank_closed_form, NilHecke, NilHeckeElement, Preimage, RankTarget,
    Verification,
};
use spin_nilhecke::poly::{Even, Kind, Spin};
use spin_nilhecke::weyl::WeylType;
use spin_nilhecke::{Scalar, ScalarDomain, Variant};

fn parse<K: Kind>(nh: &NilHecke<K>, src: &str) -> NilHeckeElement<K> {
    nh.from_expression(&parse_operator(src).unwrap()).unwrap()
}

fn pbw_round_trips<K: Kind>(ty: WeylType, n: usize, count: usize) {
    let nh = NilHecke::<K>::new(ty, n).unwrap();
    (0..count as u64).into_par_iter().for_each(|seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = 2 * rng.gen_range(-3..=3);
        let a = nh.random_homogeneous(&mut rng, d, 4);
        let op = |f: &_| nh.apply(&a, f);
        let back = nh
            .pbw_decompose(&op, Some(d), ScalarDomain::Integer, Verification::Schubert)
            .unwrap();
        assert!(
            back == a,
            "{ty}{n} seed {seed}: {} vs {}",
            nh.format(&a),
            nh.format(&back)
        );
        if !a.is_zero() {
            assert_eq!(nh.q_degree(&a), Some(d));
        }
    });
}

#[test]
fn pbw_round_trip_spin() {
    for (ty, n) in [
        (WeylType::B, 1),
        (WeylType::B, 2),
        (WeylType::B, 3),
        (WeylType::D, 2),
        (WeylType::D, 3),
    ] {
        pbw_round_trips::<Spin>(ty, n, 100);
    }
}

#[test]
fn pbw_round_trip_even() {
    for (ty, n) in [
        (WeylType::A, 2),
        (WeylType::A, 3),
        (WeylType::B, 2),
        (WeylType::D, 3),
    ] {
        pbw_round_trips::<Even>(ty, n, 100);
    }
}

#[test]
fn straightening_in_normal_form() {
    let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
    let a = parse(&nh, "d1 x1 + x1 d1");
    assert_eq!(nh.format(&a), "1 - x2*d1 + x1*d1");
    let sq = parse(&nh, "d1 d1");
    assert!(sq.is_zero());
    let x = parse(&nh, "x1 x2 + x2 x1");
    assert!(x.is_zero());
}

#[test]
fn multiplication_matches_composition() {
    let nh = NilHecke::<Spin>::new(WeylType::D, 3).unwrap();
    let a = parse(&nh, "x1 d2 + 2 d3");
    let b = parse(&nh, "d1 x3 - x2^2");
    let ab = nh.multiply(&a, &b).unwrap();
    assert_eq!(ab, parse(&nh, "(x1 d2 + 2 d3)(d1 x3 - x2^2)"));
}

#[test]
fn faithful_on_schubert_polynomials_up_to_degree_eight() {
    for (ty, n) in [(WeylType::B, 2), (WeylType::D, 2), (WeylType::D, 3)] {
        let nh = NilHecke::<Spin>::new(ty, n).unwrap();
        for d in (-8..=8).step_by(2) {
            let (size, rank) = nh.faithfulness_rank(d);
            assert_eq!(size, rank, "{ty}{n} q-degree {d}");
        }
    }
}

#[test]
fn matrix_units_of_b2_over_integers() {
    let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
    let size = nh.group().len();
    for v in 0..size {
        for w in 0..size {
            let m = nh.matrix_unit(v, w);
            match nh.solve_preimage(&m, ScalarDomain::Integer).unwrap() {
                Preimage::Solved(a) => {
                    assert!(nh.to_matrix(&a, ScalarDomain::Integer).unwrap().same_as(&m))
                }
                Preimage::Unsolvable { coefficient } => panic!("E_{v}{w} needs {coefficient}"),
            }
        }
    }
}

#[test]
fn d2_units_need_halves() {
    let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
    let mut unsolvable = 0;
    for v in 0..4 {
        for w in 0..4 {
            let m = nh.matrix_unit(v, w);
            if !nh
                .solve_preimage(&m, ScalarDomain::Integer)
                .unwrap()
                .is_solved()
            {
                unsolvable += 1;
            }
            assert!(nh
                .solve_preimage(&m, ScalarDomain::Dyadic)
                .unwrap()
                .is_solved());
        }
    }
    assert_eq!(unsolvable, 15);
}

#[test]
fn graded_ranks_even_variant() {
    for target in [RankTarget::Nc, RankTarget::Nh, RankTarget::Lambda] {
        for (ty, n) in [
            (WeylType::A, 2),
            (WeylType::A, 3),
            (WeylType::B, 2),
            (WeylType::D, 3),
        ] {
            let a = graded_rank(target, Variant::Even, ty, n, 12).unwrap();
            let b = graded_rank_closed_form(target, Variant::Even, ty, n, 12).unwrap();
            assert!(a.agrees_to(&b, 12), "{target} even {ty}{n}: {a} vs {b}");
        }
    }
}

#[test]
fn graded_ranks_spin_variant() {
    for target in [RankTarget::Nc, RankTarget::Nh] {
        for (ty, n) in [
            (WeylType::B, 2),
            (WeylType::B, 3),
            (WeylType::D, 2),
            (WeylType::D, 3),
        ] {
            let a = graded_rank(target, Variant::Spin, ty, n, 12).unwrap();
            let b = graded_rank_closed_form(target, Variant::Spin, ty, n, 12).unwrap();
            assert!(a.agrees_to(&b, 12), "{target} spin {ty}{n}: {a} vs {b}");
        }
    }
}

#[test]
fn center_of_b2_is_symmetric_in_squares() {
    let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
    let r = nh.center_check(8).unwrap();
    assert!(r.passed());
}

fn element(nh: &NilHecke<Spin>) -> impl Strategy<Value = NilHeckeElement<Spin>> + '_ {
    (any::<u64>(), -3i64..=3).prop_map(move |(seed, half)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        nh.random_homogeneous(&mut rng, 2 * half, 3)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn format_parses_back(seed: u64, half in -3i64..=3) {
        let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = nh.random_homogeneous(&mut rng, 2 * half, 4);
        prop_assert_eq!(parse(&nh, &nh.format(&a)), a);
    }

    #[test]
    fn multiplication_is_associative(seed: u64) {
        let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xs: Vec<_> = (0..3).map(|_| {
            let d = 2 * rng.gen_range(-2..=2);
            nh.random_homogeneous(&mut rng, d, 3)
        }).collect();
        let l = nh.multiply(&nh.multiply(&xs[0], &xs[1]).unwrap(), &xs[2]).unwrap();
        let r = nh.multiply(&xs[0], &nh.multiply(&xs[1], &xs[2]).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn to_matrix_is_multiplicative(seed: u64) {
        let nh = NilHecke::<Spin>::new(WeylType::B, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = nh.random_homogeneous(&mut rng, 2, 3);
        let b = nh.random_homogeneous(&mut rng, -2, 3);
        let ab = nh.multiply(&a, &b).unwrap();
        let lhs = nh.to_matrix(&ab, ScalarDomain::Integer).unwrap();
        let rhs = nh.to_matrix(&a, ScalarDomain::Integer).unwrap().mul(&nh.to_matrix(&b, ScalarDomain::Integer).unwrap());
        prop_assert!(lhs.same_as(&rhs));
    }

    #[test]
    fn solve_inverts_to_matrix_d2(seed: u64) {
        let nh = NilHecke::<Spin>::new(WeylType::D, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = 2 * rng.gen_range(-2..=2);
        let a = nh.random_homogeneous(&mut rng, d, 3);
        let m = nh.to_matrix(&a, ScalarDomain::Dyadic).unwrap();
        match nh.solve_preimage(&m, ScalarDomain::Integer).unwrap() {
            Preimage::Solved(b) => prop_assert_eq!(b, a),
            Preimage::Unsolvable { coefficient } => prop_assert!(false, "needs {}", coefficient),
        }
    }

    #[test]
    fn scaling_commutes_with_formatting(a in element(&NilHecke::<Spin>::new(WeylType::B, 1).unwrap())) {
        let two = Scalar::from_integer(BigInt::from(2));
        let nh = NilHecke::<Spin>::new(WeylType::B, 1).unwrap();
        prop_assert_eq!(parse(&nh, &format!("2*({})", nh.format(&a))), a.scale(&two));
    }
}
