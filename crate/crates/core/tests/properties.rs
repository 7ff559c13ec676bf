mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: CASES, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring(a in q_laurent(4), b in q_laurent(4), c in q_laurent(4)) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn invert(a in q_invertible(6), k in -3i64..=3) {
        invert_roundtrip(&a, k)?;
    }

    #[test]
    fn derivative_is_a_derivation(a in q_laurent(5), b in q_laurent(5)) {
        leibniz(&a, &b)?;
    }

    #[test]
    fn dilation(a in q_laurent(3), b in q_laurent(3), kp in 1i64..=3, kq in 1usize..=3) {
        dilate_multiplicative(&a, &b, kp, kq)?;
    }

    #[test]
    fn u_conversion(s in symmetric(), t in symmetric(), a in antisymmetric(), b in antisymmetric()) {
        conversion_homomorphism(&s, &t, &a, &b)?;
    }

    #[test]
    fn reversion(f in odd_tangent_to_identity(9)) {
        reversion_roundtrip(&f)?;
    }

    #[test]
    fn json_roundtrip(a in q_laurent(3)) {
        use abelcount::series::json::AnySeries;
        let s = AnySeries::PQ(a);
        prop_assert_eq!(AnySeries::from_json(&s.to_json()).unwrap(), s);
    }
}
