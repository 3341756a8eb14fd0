use num_bigint::BigInt;
use proptest::prelude::*;
use skein_core::LaurentPoly;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().specialize_q1(), a.specialize_q1());
    }

    #[test]
    fn q1_is_a_homomorphism(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).specialize_q1(), a.specialize_q1() * b.specialize_q1());
        prop_assert_eq!((&a + &b).specialize_q1(), a.specialize_q1() + b.specialize_q1());
    }

    #[test]
    fn positivity_is_closed(a in laurent(), b in laurent()) {
        let (pa, pb) = (square_free_abs(&a), square_free_abs(&b));
        prop_assert!(pa.is_positive() && pb.is_positive());
        prop_assert!((&pa * &pb).is_positive());
        prop_assert!((&pa + &pb).is_positive());
    }

    #[test]
    fn text_and_json_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn shift_matches_monomial_product(a in laurent(), k in -10i64..10) {
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::q_pow(k));
    }
}

fn square_free_abs(a: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(a.terms().map(|(e, c)| (e, num_traits::Signed::abs(c))))
}

#[test]
fn quantum_integers_at_q1() {
    for i in 1..20 {
        let qi = LaurentPoly::quantum_int(i).unwrap();
        assert_eq!(qi.specialize_q1(), BigInt::from(i));
        assert_eq!(qi.bar(), qi);
        assert_eq!(qi.q_degree_range(), Some((2 - 2 * i, 2 * i - 2)));
    }
}

#[test]
fn big_coefficients_survive_json() {
    let big = BigInt::from(1u64 << 60) * BigInt::from(1000);
    let a = LaurentPoly::monomial(big.clone(), -3);
    let v = a.to_json();
    assert!(v["-3"].is_string());
    assert_eq!(LaurentPoly::from_json(&v).unwrap().coeff(-3), big);
}
