use skein_core::polyseq::{expand_in, Poly1};
use skein_core::positivity::{self, lower_bound_coeffs, replay};
use skein_core::{torus, LaurentPoly, PolySeq};

#[test]
fn uniqueness_levels_two_and_three() {
    let r = positivity::torus_uniqueness(3, 3).unwrap();
    assert!(r.certified(), "{r}");
    assert!(r.baseline.is_empty());
    assert_eq!(r.levels[0].killed, 48);
    assert_eq!(r.levels[1].killed, 342);
}

#[test]
fn uniqueness_to_level_four() {
    assert!(positivity::torus_uniqueness(4, 2).unwrap().certified());
}

#[test]
fn smaller_boxes_stay_certified() {
    for b in 0..=3 {
        assert!(positivity::torus_uniqueness(3, b).unwrap().certified(), "box {b}");
    }
}

#[test]
fn uniqueness_witnesses_replay() {
    let r = positivity::torus_uniqueness(3, 2).unwrap();
    for level in &r.levels {
        let (d, w) = level.first_witness.as_ref().unwrap();
        let p = positivity::perturbed_that(level.level, d).unwrap();
        assert!(positivity::replay_witness(&p, w, false).unwrap());
    }
}

#[test]
fn lower_bound_reads_that_coefficients() {
    for p in [PolySeq::s(), PolySeq::monomial(), PolySeq::t_hat()] {
        for n in 2..=12usize {
            let e = expand_in(&p.get(n).unwrap(), &PolySeq::t_hat()).unwrap();
            let b = lower_bound_coeffs(&p, n).unwrap();
            assert_eq!(b.len(), n + 1);
            for (i, bi) in b.iter().enumerate() {
                let ei = e.get(i).cloned().unwrap_or_default();
                let expect = if i == 0 { ei } else { ei.shift(2 * i as i64) };
                assert_eq!(*bi, expect, "{} n={n} i={i}", p.name());
            }
        }
        assert!(positivity::lower_bound_certify(&p, 20).unwrap().is_certified());
    }
}

#[test]
fn lower_bound_rejects_shifted_p1() {
    let p = PolySeq::from_table("shift", vec![Poly1::one(), Poly1::from_ints(&[1, 1])]).unwrap();
    assert!(positivity::lower_bound_certify(&p, 1).is_err());
}

#[test]
fn sandwich_failure_shows_on_the_torus() {
    for p in [PolySeq::t_hat(), PolySeq::s(), PolySeq::monomial()] {
        let v = positivity::sandwich_check(&p, 3).unwrap();
        if !v.holds() {
            let r = torus::positivity_scan(&p, 6, false).unwrap();
            assert!(!r.is_certified(), "{}", p.name());
            assert!(replay(&r, &p).unwrap());
        }
    }
    assert!(!positivity::sandwich_check(&PolySeq::monomial(), 3).unwrap().holds());
}

#[test]
fn replay_catches_tampering() {
    let s = PolySeq::s();
    let mut r = torus::positivity_scan(&s, 2, false).unwrap();
    assert!(replay(&r, &s).unwrap());
    r.witnesses[0].coeff = LaurentPoly::constant(-7);
    assert!(!replay(&r, &s).unwrap());
}
