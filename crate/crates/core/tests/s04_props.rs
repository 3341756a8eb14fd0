use proptest::prelude::*;
use skein_core::s04::{self, S04Element, S04Label};
use skein_core::{Basis, LaurentPoly, PolySeq};

#[test]
fn sigma_moves_a_bn_along() {
    for n in -10..=10 {
        assert_eq!(s04::apply_sigma(&s04::mul_a_bn(n), 1), s04::mul_a_bn(n + 1));
    }
}

#[test]
fn tna_b_matches_recurrence() {
    for n in 0..=30 {
        assert_eq!(
            s04::mul_tna_b(n),
            s04::mul_tna_b_by_recurrence(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn h_structure() {
    let all = s04::products_sn1_s01(20).unwrap();
    for (n, full) in all.iter().enumerate().skip(1) {
        let h = s04::h_from_full(n, full).unwrap();
        assert!(s04::h_violations(n, &h).is_empty(), "{:?}", s04::h_violations(n, &h));
    }
    let h1 = s04::h_from_full(1, &all[1]).unwrap();
    assert_eq!(h1, s04::e12(&Basis::S));
    assert!(s04::h_from_full(0, &all[0]).unwrap().is_zero());
}

#[test]
fn g_is_the_curve_part() {
    let all = s04::products_sn1_s01(20).unwrap();
    for (n, full) in all.iter().enumerate() {
        let n_i = n as i64;
        let curve_part = S04Element::from_terms(
            Basis::S,
            full.terms()
                .filter(|(l, _)| l.slope.is_some_and(|s| s.s() != 0))
                .map(|(l, c)| (*l, c.clone())),
        );
        let mut expect = s04::g_s04_closed(n).unwrap();
        expect.add_term(S04Label::slope(n_i, 2), LaurentPoly::q_pow(2 * n_i));
        assert_eq!(curve_part, expect, "n = {n}");
    }
}

#[test]
fn lowest_q_terms() {
    for n in 1..=20usize {
        let (e, x) = s04::lowest_q_term_s04(n).unwrap();
        assert_eq!(e, -2 * n as i64);
        assert_eq!(x, S04Element::from_label(Basis::S, S04Label::slope(n as i64, 0)));
    }
}

#[test]
fn p1_forcing_every_sign() {
    for d in (-3..=3).filter(|&d| d != 0) {
        let w = s04::p1_forcing_witness(d).unwrap();
        assert_eq!(w.gamma.1, LaurentPoly::constant(-d));
        assert_eq!(w.a.1, LaurentPoly::constant(d));
        let r = w.report();
        assert!(!r.is_certified());
        assert!(skein_core::positivity::replay_witness(&PolySeq::s(), &r.witnesses[0], false).unwrap());
    }
}

fn gamma_monomial() -> impl Strategy<Value = [u32; 4]> {
    prop::array::uniform4(0u32..3)
}

proptest! {
    #[test]
    fn peripheral_curves_are_central(g in gamma_monomial(), m in -6i64..6, n in 0usize..6) {
        let s = PolySeq::s();
        let that = PolySeq::t_hat();
        let x = S04Element::from_label(Basis::S, S04Label::slope(m, 2));
        let gx = s04::mul_peripheral(&x, g, &s).unwrap();
        prop_assert_eq!(
            s04::left_mul_s10(&gx).unwrap(),
            s04::mul_peripheral(&s04::mul_s10_sm2(m).unwrap(), g, &s).unwrap()
        );
        let b = S04Element::from_label(Basis::THat, S04Label::slope(m, 1));
        let gb = s04::mul_peripheral(&b, g, &that).unwrap();
        prop_assert_eq!(
            s04::left_mul_a(&gb).unwrap(),
            s04::mul_peripheral(&s04::mul_a_bn(m), g, &that).unwrap()
        );
        let t = s04::mul_tna_b(n);
        prop_assert_eq!(
            s04::mul_peripheral(&t, g, &that).unwrap(),
            s04::mul_peripheral(&s04::mul_peripheral(&t, [g[0], 0, 0, 0], &that).unwrap(), [0, g[1], g[2], g[3]], &that).unwrap()
        );
    }

    #[test]
    fn sigma_moves_s10_sm2_by_two(m in -12i64..12) {
        prop_assert_eq!(
            s04::apply_sigma(&s04::mul_s10_sm2(m).unwrap(), 1),
            s04::mul_s10_sm2(m + 2).unwrap()
        );
    }
}
