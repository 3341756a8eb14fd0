use proptest::prelude::*;
use skein_core::polyseq::{
    chebyshev, expand_in, reconstruct, seq_leq, substitute_t, ChebKind, Poly1, PolySeq,
};
use skein_core::LaurentPoly;

#[test]
fn chebyshev_characterization_to_64() {
    for n in 0..=64i64 {
        let t = substitute_t(&chebyshev(ChebKind::T, n as usize)).unwrap();
        let expect = if n == 0 {
            LaurentPoly::constant(2)
        } else {
            LaurentPoly::from_terms([(n, 1), (-n, 1)])
        };
        assert_eq!(t, expect, "T_{n}");

        let s = substitute_t(&chebyshev(ChebKind::S, n as usize)).unwrap();
        let expect = LaurentPoly::from_terms((0..=n).map(|i| (n - 2 * i, 1)));
        assert_eq!(s, expect, "S_{n}");
    }
}

#[test]
fn s_is_a_sum_of_that() {
    let that = PolySeq::t_hat();
    for n in 0..=64usize {
        let c = expand_in(&chebyshev(ChebKind::S, n), &that).unwrap();
        for (k, ck) in c.iter().enumerate() {
            let expect = if k <= n && (n - k) % 2 == 0 { 1 } else { 0 };
            assert_eq!(*ck, LaurentPoly::constant(expect), "n={n} k={k}");
        }
    }
}

#[test]
fn order_between_builtins() {
    let that = PolySeq::t_hat();
    let s = PolySeq::s();
    assert!(seq_leq(&that, &s, 64).unwrap().holds);
    let v = seq_leq(&s, &that, 64).unwrap();
    assert!(!v.holds);
    let w = v.witness.unwrap();
    assert_eq!((w.n, w.coeff.clone()), (2, LaurentPoly::constant(-1)));
    assert!(seq_leq(&that, &PolySeq::monomial(), 30).unwrap().holds);
    assert!(!seq_leq(&PolySeq::monomial(), &s, 30).unwrap().holds);
}

fn poly() -> impl Strategy<Value = Poly1> {
    prop::collection::vec(-9i64..=9, 0..8).prop_map(|c| Poly1::from_ints(&c))
}

/// A normalized sequence `P_n = x^n + Σ_{k<n} c_{n,k} x^k` up to degree 5.
fn normalized_seq() -> impl Strategy<Value = PolySeq> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 5).prop_map(|rows| {
        let mut table = vec![Poly1::one()];
        for (n, row) in rows.iter().enumerate() {
            let n = n + 1;
            let mut c: Vec<i64> = row[..n.min(5)].to_vec();
            c.resize(n, 0);
            c.push(1);
            table.push(Poly1::from_ints(&c));
        }
        PolySeq::from_table("random", table).unwrap()
    })
}

proptest! {
    #[test]
    fn expansion_round_trips(p in poly()) {
        for seq in [PolySeq::t_hat(), PolySeq::s(), PolySeq::monomial()] {
            let c = expand_in(&p, &seq).unwrap();
            prop_assert_eq!(reconstruct(&c, &seq).unwrap(), p.clone());
        }
    }

    #[test]
    fn substitution_is_multiplicative(a in poly(), b in poly()) {
        let lhs = substitute_t(&(&a * &b)).unwrap();
        let rhs = &substitute_t(&a).unwrap() * &substitute_t(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linearization_is_commutative_and_exact(i in 0usize..8, j in 0usize..8) {
        let s = PolySeq::s();
        let c = s.product_coeffs(i, j).unwrap();
        prop_assert_eq!(c.clone(), s.product_coeffs(j, i).unwrap());
        prop_assert_eq!(reconstruct(&c, &s).unwrap(), &s.get(i).unwrap() * &s.get(j).unwrap());
    }

    #[test]
    fn order_is_antisymmetric(p in normalized_seq(), q in normalized_seq(), same in any::<bool>()) {
        let q = if same { p.clone() } else { q };
        let le = seq_leq(&p, &q, 5).unwrap().holds;
        let ge = seq_leq(&q, &p, 5).unwrap().holds;
        if le && ge {
            for n in 0..=5 {
                prop_assert_eq!(p.get(n).unwrap(), q.get(n).unwrap());
            }
        }
        prop_assert!(seq_leq(&p, &p, 5).unwrap().holds);
    }
}
