//! Bounded consistency checks between the product formulas and independent
//! ways of computing the same products.

use std::fmt;

use serde_json::{json, Value};

use crate::element::Label;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::polyseq::Basis;
use crate::ptorus::{self, PTorusElement, PTorusLabel};
use crate::s04::{self, S04Element, S04Label};

/// Outcome of one bounded check. Each failure names the instance that broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub surface: String,
    pub n_max: usize,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(check: &str, surface: &str, n_max: usize) -> Self {
        Self {
            check: check.into(),
            surface: surface.into(),
            n_max,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "surface": self.surface,
            "n_max": self.n_max,
            "cases": self.cases,
            "verdict": if self.passed() { "passed" } else { "failed" },
            "failures": self.failures,
        })
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {} up to n={}: {} ({} cases)",
            self.surface,
            self.check,
            self.n_max,
            if self.passed() { "passed" } else { "FAILED" },
            self.cases
        )?;
        for line in &self.failures {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Recursive and closed forms of `G_n` agree for `0 <= n <= n_max`.
pub fn ptor_g_closed(n_max: usize) -> CheckReport {
    let mut rep = CheckReport::new("g-closed", PTorusLabel::SURFACE, n_max);
    for n in 0..=n_max {
        let (a, b) = (ptorus::g_recursive(n), ptorus::g_closed(n));
        rep.record(a == b, || format!("n={n}: recursive {a} != closed {b}"));
    }
    rep
}

/// `T_{1,0} (T_{n,1} T_{0,1})` computed by the `T_{1,0} T_{m,2}` lemma and
/// by `(T_{1,0} T_{n,1}) T_{0,1}`.
pub fn t10_expansion_two_ways(n: usize) -> Result<(PTorusElement, PTorusElement)> {
    let via_lemma = ptorus::left_mul_t10(&ptorus::mul_tn1_t01(n)?)?;
    let t10_tn1 = ptorus::mul_once(&PTorusLabel::slope(1, 0), &crate::CurveClass::new(n as i64, 1)?)?;
    let mut via_once = PTorusElement::zero(Basis::THat);
    for (l, c) in t10_tn1.terms() {
        let m = l.slope.map_or(0, |s| s.r());
        via_once.add_scaled(&ptorus::mul_tn1_t01(m as usize)?, c)?;
    }
    Ok((via_lemma, via_once))
}

/// The two expansions of [`t10_expansion_two_ways`] agree for
/// `2 <= n <= n_max`.
pub fn ptor_induction(n_max: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("induction", PTorusLabel::SURFACE, n_max);
    for n in 2..=n_max {
        let (a, b) = t10_expansion_two_ways(n)?;
        rep.record(a == b, || format!("n={n}: {a} != {b}"));
    }
    Ok(rep)
}

/// `h_n` has the expected shape for `1 <= n <= n_max`, and `h_1 = e12`.
pub fn s04_h_bounds(n_max: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("h-bounds", S04Label::SURFACE, n_max);
    let all = s04::products_sn1_s01(n_max.max(1))?;
    for (n, full) in all.iter().enumerate().skip(1).take(n_max) {
        let h = s04::h_from_full(n, full)?;
        let bad = s04::h_violations(n, &h);
        rep.record(bad.is_empty(), || format!("n={n}: {}", bad.join("; ")));
        if n == 1 {
            let e = s04::e12(&Basis::S);
            rep.record(h == e, || format!("h_1 = {h}, expected {e}"));
        }
    }
    Ok(rep)
}

/// The closed form of `T_n(a) b` against the Chebyshev recurrence, for
/// `0 <= n <= n_max`.
pub fn s04_fg(n_max: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("fg", S04Label::SURFACE, n_max);
    for n in 0..=n_max {
        let (a, b) = (s04::mul_tna_b(n), s04::mul_tna_b_by_recurrence(n)?);
        rep.record(a == b, || format!("n={n}: closed {a} != recurrence {b}"));
    }
    Ok(rep)
}

/// The half twist carries `a b_n` to `a b_{n+1}` and `S_{1,0} S_{m,2}` to
/// `S_{1,0} S_{m+2,2}`, for `|n|, |m| <= n_max`.
pub fn s04_sigma(n_max: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("sigma", S04Label::SURFACE, n_max);
    let k = n_max as i64;
    for n in -k..=k {
        let (a, b) = (s04::apply_sigma(&s04::mul_a_bn(n), 1), s04::mul_a_bn(n + 1));
        rep.record(a == b, || format!("a*b_{n}: {a} != {b}"));
    }
    for m in -k..=k {
        let a = s04::apply_sigma(&s04::mul_s10_sm2(m)?, 1);
        let b = s04::mul_s10_sm2(m + 2)?;
        rep.record(a == b, || format!("S(1,0)*S({m},2): {a} != {b}"));
    }
    Ok(rep)
}

/// The non-horizontal part of `S_{n,1} S_{0,1}` is `q^{2n} S_{n,2} + g_n`
/// for `0 <= n <= n_max`.
pub fn s04_g_closed(n_max: usize) -> Result<CheckReport> {
    let mut rep = CheckReport::new("g-closed", S04Label::SURFACE, n_max);
    for (n, full) in s04::products_sn1_s01(n_max)?.iter().enumerate() {
        let n_i = n as i64;
        let curve_part = S04Element::from_terms(
            Basis::S,
            full.terms()
                .filter(|(l, _)| l.slope.is_some_and(|s| s.s() != 0))
                .map(|(l, c)| (*l, c.clone())),
        );
        let mut expect = s04::g_s04_closed(n)?;
        expect.add_term(S04Label::slope(n_i, 2), LaurentPoly::q_pow(2 * n_i));
        rep.record(curve_part == expect, || {
            format!("n={n}: {curve_part} != {expect}")
        });
    }
    Ok(rep)
}
