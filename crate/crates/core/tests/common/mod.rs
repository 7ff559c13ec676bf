//! Strategies and property bodies shared by `properties.rs` and `acceptance.rs`.
#![allow(dead_code)]

use abelcount::arith::rat;
use abelcount::series::{Coefficient, PLaurent, QSeries, USeries};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub const CASES: u32 = 200;

type Out = Result<(), TestCaseError>;

pub fn q_rational(order: usize) -> impl Strategy<Value = QSeries<abelcount::arith::Rational>> {
    prop::collection::vec(-6i64..=6, order + 1).prop_map(|c| QSeries::from_integers(&c))
}

pub fn q_invertible(order: usize) -> impl Strategy<Value = QSeries<abelcount::arith::Rational>> {
    (prop_oneof![-4i64..=-1, 1i64..=4], prop::collection::vec(-6i64..=6, order)).prop_map(|(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        QSeries::from_integers(&c)
    })
}

pub fn laurent() -> impl Strategy<Value = PLaurent> {
    prop::collection::vec((-5i64..=5, -4i64..=4), 0..5).prop_map(|p| PLaurent::from_pairs(&p))
}

pub fn q_laurent(order: usize) -> impl Strategy<Value = QSeries<PLaurent>> {
    prop::collection::vec(laurent(), order + 1).prop_map(QSeries::new)
}

/// sum c_n (p^n + p^-n), integer powers of p.
pub fn symmetric() -> impl Strategy<Value = PLaurent> {
    prop::collection::vec((0i64..=3, -4i64..=4), 0..4).prop_map(|v| {
        let pairs: Vec<(i64, i64)> = v.iter().flat_map(|&(n, c)| [(2 * n, c), (-2 * n, c)]).collect();
        PLaurent::from_pairs(&pairs)
    })
}

/// sum c_k (w^k - w^-k) with k odd.
pub fn antisymmetric() -> impl Strategy<Value = PLaurent> {
    prop::collection::vec((0i64..=2, -4i64..=4), 0..4).prop_map(|v| {
        let pairs: Vec<(i64, i64)> = v.iter().flat_map(|&(k, c)| [(2 * k + 1, c), (-2 * k - 1, -c)]).collect();
        PLaurent::from_pairs(&pairs)
    })
}

/// u + a_3 u^3 + a_5 u^5 + ... through u^order.
pub fn odd_tangent_to_identity(order: usize) -> impl Strategy<Value = USeries> {
    prop::collection::vec(-3i64..=3, (order - 1) / 2).prop_map(move |odd| {
        let mut c = vec![0; order + 1];
        c[1] = 1;
        for (i, a) in odd.into_iter().enumerate() {
            c[2 * i + 3] = a;
        }
        USeries::from_integers(&c)
    })
}

pub fn ring_axioms(a: &QSeries<PLaurent>, b: &QSeries<PLaurent>, c: &QSeries<PLaurent>) -> Out {
    let m = |x: &QSeries<PLaurent>, y: &QSeries<PLaurent>| x.mul(y).unwrap();
    prop_assert_eq!(a.add(b), b.add(a));
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(m(a, b), m(b, a));
    prop_assert_eq!(m(&m(a, b), c), m(a, &m(b, c)));
    prop_assert_eq!(m(a, &b.add(c)), m(a, b).add(&m(a, c)));
    prop_assert_eq!(m(a, &a.one()), a.clone());
    let zero = a.sub(a);
    prop_assert_eq!(a.add(&zero), a.clone());
    prop_assert_eq!(a.add(&a.neg()), zero);
    Ok(())
}

pub fn invert_roundtrip(a: &QSeries<abelcount::arith::Rational>, shift: i64) -> Out {
    prop_assert_eq!(a.mul(&a.invert().unwrap()).unwrap(), a.one());
    // the same with a monomial leading coefficient in the Laurent regime
    let lifted = a.map(|c| Ok(PLaurent::monomial(c.clone(), 0))).unwrap();
    let mut coeffs = lifted.coeffs().to_vec();
    coeffs[0] = coeffs[0].mul_monomial(&rat(1), shift);
    let l = QSeries::new(coeffs);
    prop_assert_eq!(l.mul(&l.invert().unwrap()).unwrap(), l.one());
    Ok(())
}

pub fn leibniz(a: &QSeries<PLaurent>, b: &QSeries<PLaurent>) -> Out {
    let lhs = a.mul(b).unwrap().q_derivative();
    let rhs = a.q_derivative().mul(b).unwrap().add(&a.mul(&b.q_derivative()).unwrap());
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn dilate_multiplicative(a: &QSeries<PLaurent>, b: &QSeries<PLaurent>, kp: i64, kq: usize) -> Out {
    let ab = a.mul(b).unwrap();
    prop_assert_eq!(ab.dilate(kp, kq), a.dilate(kp, kq).mul(&b.dilate(kp, kq)).unwrap());
    prop_assert_eq!(ab.dilate_q(kq), a.dilate_q(kq).mul(&b.dilate_q(kq)).unwrap());
    Ok(())
}

pub fn conversion_homomorphism(s: &PLaurent, t: &PLaurent, a: &PLaurent, b: &PLaurent) -> Out {
    let u = 10;
    let st = s.symmetric_to_u(u).unwrap().mul(&t.symmetric_to_u(u).unwrap());
    prop_assert_eq!(st, s.try_mul(t).unwrap().symmetric_to_u(u).unwrap());
    prop_assert_eq!(
        s.add(t).symmetric_to_u(u).unwrap(),
        s.symmetric_to_u(u).unwrap().add(&t.symmetric_to_u(u).unwrap())
    );
    // (iA)(iB) = -AB
    let ab = a.antisymmetric_to_u(u).unwrap().mul(&b.antisymmetric_to_u(u).unwrap());
    prop_assert_eq!(ab, a.try_mul(b).unwrap().symmetric_to_u(u).unwrap().scale(&rat(-1)));
    Ok(())
}

pub fn reversion_roundtrip(f: &USeries) -> Out {
    let g = f.revert_lagrange().unwrap();
    prop_assert_eq!(&g, &f.revert_odd().unwrap());
    let id = USeries::variable(f.order());
    prop_assert_eq!(f.compose(&g).unwrap(), id.clone());
    prop_assert_eq!(g.compose(f).unwrap(), id);
    Ok(())
}

fn deterministic(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn outcome<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Runs each suite for `cases` deterministic cases; returns (name, result) per suite.
pub fn run_suites(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    vec![
        (
            "ring axioms",
            outcome(deterministic(cases).run(&(q_laurent(4), q_laurent(4), q_laurent(4)), |(a, b, c)| ring_axioms(&a, &b, &c))),
        ),
        (
            "invert roundtrip",
            outcome(deterministic(cases).run(&(q_invertible(6), -3i64..=3), |(a, k)| invert_roundtrip(&a, k))),
        ),
        ("leibniz", outcome(deterministic(cases).run(&(q_laurent(5), q_laurent(5)), |(a, b)| leibniz(&a, &b)))),
        (
            "dilate multiplicativity",
            outcome(deterministic(cases).run(&(q_laurent(3), q_laurent(3), 1i64..=3, 1usize..=3), |(a, b, kp, kq)| {
                dilate_multiplicative(&a, &b, kp, kq)
            })),
        ),
        (
            "conversion homomorphism",
            outcome(deterministic(cases).run(&(symmetric(), symmetric(), antisymmetric(), antisymmetric()), |(s, t, a, b)| {
                conversion_homomorphism(&s, &t, &a, &b)
            })),
        ),
        ("reversion roundtrip", outcome(deterministic(cases).run(&odd_tangent_to_identity(9), |f| reversion_roundtrip(&f)))),
    ]
}
