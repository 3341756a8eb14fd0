//! Products on the once-punctured torus.
//!
//! There is no general product formula here, only the families below:
//!
//! * curves meeting once: `T_{r,s} T_{u,v} = q^D T_{r+u,s+v} + q^-D T_{r-u,s-v}`
//!   with `D = rv - su`, `(u,v)` primitive and `(r/d, s/d)` meeting it once;
//! * `T_{1,0} T_{n,2} = q^2 T_{n+1,2} + q^-2 T_{n-1,2} + (U + q^2 + q^-2) A_n`;
//! * `T_{n,1} T_{0,1} = q^n T_{n,2} + q^-n T_{n,0} + (U + q^2 + q^-2) G_n`;
//! * anything parallel, or involving only the peripheral curve `U`.
//!
//! Elements are kept in the `T̂` flavor. The peripheral part of a label is
//! `T̂_u(U)`, so `u <= 1` reads the same in every normalized flavor.

use std::fmt;

use serde_json::{json, Value};

use crate::curves::{parse_pair, CurveClass};
use crate::element::{self, linearize, Label, SkeinElement};
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;
use crate::polyseq::{chebyshev, Basis, ChebKind, Poly1, PolySeq};

/// `gcd(slope)` parallel copies of a primitive curve together with `u`
/// copies of the peripheral curve.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PTorusLabel {
    pub slope: Option<CurveClass>,
    pub u: u32,
}

impl PTorusLabel {
    pub const EMPTY: PTorusLabel = PTorusLabel { slope: None, u: 0 };

    /// `(0,0)` gives no essential component.
    pub fn new(r: i64, s: i64, u: u32) -> Self {
        Self {
            slope: CurveClass::try_new(r, s),
            u,
        }
    }

    pub fn slope(r: i64, s: i64) -> Self {
        Self::new(r, s, 0)
    }

    pub fn peripheral(u: u32) -> Self {
        Self { slope: None, u }
    }

    pub fn with_u(self, u: u32) -> Self {
        Self { u, ..self }
    }
}

impl fmt::Display for PTorusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Basis::THat))
    }
}

impl fmt::Debug for PTorusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for PTorusLabel {
    type Err = SkeinError;

    /// Factors joined by `*`: `1`, `U`, `U^k`, or a slope `(r,s)` with an
    /// optional flavor letter in front (`T(2,1)`, `S(2,1)`).
    fn from_str(input: &str) -> Result<Self> {
        let mut label = PTorusLabel::EMPTY;
        let mut offset = 0;
        for factor in input.split('*') {
            let t = factor.trim();
            let start = offset + factor.len() - factor.trim_start().len();
            offset += factor.len() + 1;
            let err = |msg: &str| SkeinError::Parse {
                input: input.into(),
                pos: start,
                msg: msg.into(),
            };
            if t == "1" {
                continue;
            }
            if let Some(rest) = t.strip_prefix('U') {
                let k = match rest.strip_prefix('^') {
                    Some(e) => e.parse::<u32>().map_err(|_| err("bad power of U"))?,
                    None if rest.is_empty() => 1,
                    None => return Err(err("unexpected text after U")),
                };
                label.u += k;
                continue;
            }
            let pair = t.trim_start_matches(|c: char| c.is_ascii_alphabetic());
            if label.slope.is_some() {
                return Err(err("a label has at most one slope"));
            }
            let (r, s) = parse_pair(pair).map_err(|e| match e {
                SkeinError::Parse { pos, msg, .. } => SkeinError::Parse {
                    input: input.into(),
                    pos: start + (t.len() - pair.len()) + pos,
                    msg,
                },
                other => other,
            })?;
            label.slope = CurveClass::try_new(r, s);
        }
        Ok(label)
    }
}

/// Renders the peripheral part `P_k(name)` of a label.
pub(crate) fn render_peripheral(name: &str, k: u32, basis: &Basis) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ if *basis == Basis::Monomial => Some(format!("{name}^{k}")),
        _ => Some(format!("{}{k}({name})", basis.prefix())),
    }
}

impl Label for PTorusLabel {
    const SURFACE: &'static str = "t11";

    fn multiplicities(&self) -> Vec<u32> {
        vec![self.slope.map_or(0, |c| c.multiplicity()), self.u]
    }

    fn with_multiplicities(&self, m: &[u32]) -> Self {
        let slope = match self.slope {
            Some(c) => c.primitive().scaled(m[0]),
            None => {
                assert_eq!(m[0], 0, "no essential component to scale");
                None
            }
        };
        Self { slope, u: m[1] }
    }

    fn is_empty_curve(&self) -> bool {
        *self == Self::EMPTY
    }

    fn render(&self, basis: &Basis) -> String {
        let mut parts = Vec::new();
        if let Some(c) = self.slope {
            parts.push(format!("{}{c}", basis.prefix()));
        }
        parts.extend(render_peripheral("U", self.u, basis));
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "slope": self.slope.map(|c| c.to_string()),
            "u": self.u,
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let slope = match v.get("slope") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.parse::<CurveClass>()?),
            Some(_) => return Err(SkeinError::Json("slope must be a string or null".into())),
        };
        let u = v
            .get("u")
            .and_then(Value::as_u64)
            .ok_or_else(|| SkeinError::Json("label needs a nonnegative integer u".into()))?;
        Ok(Self { slope, u: u as u32 })
    }
}

pub type PTorusElement = SkeinElement<PTorusLabel>;

fn term(label: PTorusLabel, c: LaurentPoly) -> PTorusElement {
    PTorusElement::from_term(Basis::THat, label, c)
}

/// `U + q^2 + q^-2`.
fn u_plus_quantum() -> PTorusElement {
    PTorusElement::from_terms(
        Basis::THat,
        [
            (PTorusLabel::peripheral(1), LaurentPoly::one()),
            (PTorusLabel::EMPTY, LaurentPoly::from_terms([(-2, 1), (2, 1)])),
        ],
    )
}

/// Parity indicator: 1 for odd `n`, 0 for even `n`.
pub fn a_n(n: i64) -> i64 {
    n.rem_euclid(2)
}

/// Multiplies every term by `T̂_k(U)`.
pub fn mul_peripheral(x: &PTorusElement, k: u32) -> Result<PTorusElement> {
    let that = PolySeq::t_hat();
    let mut out = PTorusElement::zero(x.basis().clone());
    for (l, c) in x.terms() {
        for (j, cj) in linearize(&that, l.u, k)? {
            out.add_term(l.with_u(j), c * &cj);
        }
    }
    Ok(out)
}

/// `a · b` where `b` is primitive and meets the primitive of `a` once.
pub fn mul_once(a: &PTorusLabel, b: &CurveClass) -> Result<PTorusElement> {
    let slope = a.slope.ok_or_else(|| {
        SkeinError::InvalidArgument("left factor needs an essential component".into())
    })?;
    if !b.is_primitive() {
        return Err(SkeinError::InvalidArgument(format!(
            "{b} is not primitive"
        )));
    }
    let (r, s) = (slope.r(), slope.s());
    let (u, v) = (b.r(), b.s());
    let d = r * v - s * u;
    if d.unsigned_abs() != u64::from(slope.multiplicity()) {
        return Err(SkeinError::InvalidArgument(format!(
            "{} and {b} do not intersect once",
            slope.primitive()
        )));
    }
    let mut out = term(PTorusLabel::new(r + u, s + v, a.u), LaurentPoly::q_pow(d));
    out.add_term(PTorusLabel::new(r - u, s - v, a.u), LaurentPoly::q_pow(-d));
    Ok(out)
}

/// `T_{1,0} T_{n,2}`.
pub fn mul_t10_tn2(n: i64) -> PTorusElement {
    let mut out = term(PTorusLabel::slope(n + 1, 2), LaurentPoly::q_pow(2));
    out.add_term(PTorusLabel::slope(n - 1, 2), LaurentPoly::q_pow(-2));
    out.add_scaled(&u_plus_quantum(), &LaurentPoly::constant(a_n(n)))
        .expect("same flavor");
    out
}

/// Coefficients of `G_n` in the `S` basis of `a = (1,0)`: entry `k` is the
/// coefficient of `S_k(a)`.
pub fn g_closed_coeffs(n: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); n.max(1)];
    for i in 1..=n / 2 {
        out[n - 2 * i] += LaurentPoly::q_pow(4 * i as i64 - n as i64 - 2);
    }
    while out.last().is_some_and(LaurentPoly::is_zero) {
        out.pop();
    }
    out
}

/// `G_n` as a polynomial in `a`, from the closed sum.
pub fn g_closed(n: usize) -> Poly1 {
    g_closed_coeffs(n)
        .iter()
        .enumerate()
        .fold(Poly1::zero(), |acc, (k, c)| {
            &acc + &chebyshev(ChebKind::S, k).scale(c)
        })
}

/// `G_n` from `G_{n+1} = q^-1 G_n a - q^-2 G_{n-1} + q^{n-1} A_n`.
pub fn g_recursive(n: usize) -> Poly1 {
    let (mut prev, mut cur) = (Poly1::zero(), Poly1::zero());
    if n == 0 {
        return prev;
    }
    for m in 1..n {
        let next = &(&cur * &Poly1::x()).scale(&LaurentPoly::q_pow(-1))
            - &prev.scale(&LaurentPoly::q_pow(-2));
        let next = &next + &Poly1::constant(LaurentPoly::monomial(a_n(m as i64), m as i64 - 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// A polynomial in `a = (1,0)` given by `S`-coefficients, as a `T̂`-flavor
/// element.
fn s_poly_in_a(coeffs: &[LaurentPoly]) -> Result<PTorusElement> {
    let x = PTorusElement::from_terms(
        Basis::S,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (PTorusLabel::slope(k as i64, 0), c.clone())),
    );
    element::convert(&x, &PolySeq::s(), &PolySeq::t_hat())
}

/// `T_{n,1} T_{0,1}`.
pub fn mul_tn1_t01(n: usize) -> Result<PTorusElement> {
    let n_i = n as i64;
    if n == 0 {
        let mut out = term(PTorusLabel::slope(0, 2), LaurentPoly::one());
        out.add_term(PTorusLabel::EMPTY, LaurentPoly::constant(2));
        return Ok(out);
    }
    let mut out = term(PTorusLabel::slope(n_i, 2), LaurentPoly::q_pow(n_i));
    out.add_term(PTorusLabel::slope(n_i, 0), LaurentPoly::q_pow(-n_i));
    let g = s_poly_in_a(&g_closed_coeffs(n))?;
    out.add_scaled(&mul(&u_plus_quantum(), &g)?, &LaurentPoly::one())?;
    Ok(out)
}

/// Product of two slope-only labels, when one of the lemmas covers it.
fn mul_slopes(a: CurveClass, b: CurveClass) -> Result<PTorusElement> {
    let that = PolySeq::t_hat();
    if a.primitive() == b.primitive() {
        let p = a.primitive();
        let mut out = PTorusElement::zero(Basis::THat);
        for (k, c) in linearize(&that, a.multiplicity(), b.multiplicity())? {
            let label = PTorusLabel {
                slope: p.scaled(k),
                u: 0,
            };
            out.add_term(label, c);
        }
        return Ok(out);
    }
    let once = |x: &CurveClass, y: &CurveClass| {
        y.is_primitive() && x.det(y).unsigned_abs() == u64::from(x.multiplicity())
    };
    if once(&a, &b) {
        return mul_once(&PTorusLabel { slope: Some(a), u: 0 }, &b);
    }
    if a == CurveClass::new(1, 0)? && b.s() == 2 {
        return Ok(mul_t10_tn2(b.r()));
    }
    if b == CurveClass::new(0, 1)? && a.s() == 1 && a.r() >= 0 {
        return mul_tn1_t01(a.r() as usize);
    }
    Err(SkeinError::NoProductRule(format!(
        "T{a} * T{b} on the once-punctured torus"
    )))
}

fn mul_labels(a: &PTorusLabel, b: &PTorusLabel) -> Result<PTorusElement> {
    let core = match (a.slope, b.slope) {
        (Some(x), Some(y)) => mul_slopes(x, y)?,
        (x, y) => term(
            PTorusLabel {
                slope: x.or(y),
                u: 0,
            },
            LaurentPoly::one(),
        ),
    };
    mul_peripheral(&mul_peripheral(&core, a.u)?, b.u)
}

/// Bilinear product of `T̂`-flavor elements, defined only on label pairs one
/// of the lemmas covers.
pub fn mul(x: &PTorusElement, y: &PTorusElement) -> Result<PTorusElement> {
    for e in [x, y] {
        if *e.basis() != Basis::THat {
            return Err(SkeinError::BasisMismatch {
                expected: Basis::THat.id(),
                found: e.basis().id(),
            });
        }
    }
    let mut out = PTorusElement::zero(Basis::THat);
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&mul_labels(a, b)?, &(ca * cb))?;
        }
    }
    Ok(out)
}

/// `T_{1,0} · x`, for `x` built from slopes `(k,0)`, `(m,1)`, `(m,2)` and `U`.
pub fn left_mul_t10(x: &PTorusElement) -> Result<PTorusElement> {
    let t10 = PTorusElement::from_label(Basis::THat, PTorusLabel::slope(1, 0));
    mul(&t10, x)
}

/// The lowest power of `q` in `P((n,1)) P((0,1))` written in `B_P`, with its
/// integer-coefficient part.
pub fn upper_bound_extract(p: &PolySeq, n: usize) -> Result<(i64, PTorusElement)> {
    check_upper_bound_seq(p, n.max(2))?;
    let prod = mul_tn1_t01(n)?;
    let converted = element::convert(&prod, &PolySeq::t_hat(), p)?;
    converted
        .lowest_q_part()
        .ok_or_else(|| SkeinError::InvalidArgument("product vanished".into()))
}

/// `P_1 = x` and no `q` in the first `n` entries.
pub(crate) fn check_upper_bound_seq(p: &PolySeq, n: usize) -> Result<()> {
    if p.get(1)? != Poly1::x() {
        return Err(SkeinError::InvalidArgument(format!(
            "sequence {} has P_1 = {}, not x",
            p.name(),
            p.get(1)?
        )));
    }
    for k in 0..=n {
        if !p.get(k)?.is_q_free() {
            return Err(SkeinError::InvalidArgument(format!(
                "sequence {} has q in P_{k}",
                p.name()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(terms: &[(PTorusLabel, &str)]) -> PTorusElement {
        PTorusElement::from_terms(
            Basis::THat,
            terms.iter().map(|(l, c)| (*l, c.parse().unwrap())),
        )
    }

    fn t(r: i64, s: i64) -> PTorusLabel {
        PTorusLabel::slope(r, s)
    }

    const U: PTorusLabel = PTorusLabel { slope: None, u: 1 };
    const ONE: PTorusLabel = PTorusLabel::EMPTY;

    #[test]
    fn once_examples() {
        for d in 1..5 {
            let x = mul_once(&t(d, 0), &CurveClass::new(0, 1).unwrap()).unwrap();
            let q = LaurentPoly::q_pow(d);
            let qi = LaurentPoly::q_pow(-d);
            assert_eq!(
                x,
                PTorusElement::from_terms(Basis::THat, [(t(d, 1), q), (t(d, -1), qi)])
            );
        }
        for n in -3..6 {
            let x = mul_once(&t(1, 0), &CurveClass::new(n, 1).unwrap()).unwrap();
            assert_eq!(x, el(&[(t(n + 1, 1), "q"), (t(n - 1, 1), "q^-1")]));
        }
        assert!(mul_once(&t(1, 0), &CurveClass::new(1, 0).unwrap()).is_err());
        assert!(mul_once(&t(1, 0), &CurveClass::new(1, 2).unwrap()).is_err());
    }

    #[test]
    fn t10_tn2_examples() {
        assert_eq!(
            mul_t10_tn2(1),
            el(&[(t(2, 2), "q^2"), (t(0, 2), "q^-2"), (U, "1"), (ONE, "q^2 + q^-2")])
        );
        assert_eq!(mul_t10_tn2(2), el(&[(t(3, 2), "q^2"), (t(1, 2), "q^-2")]));
        assert_eq!(
            mul_t10_tn2(3),
            el(&[(t(4, 2), "q^2"), (t(2, 2), "q^-2"), (U, "1"), (ONE, "q^2 + q^-2")])
        );
        assert_eq!((a_n(-3), a_n(0), a_n(7)), (1, 0, 1));
    }

    #[test]
    fn g_examples() {
        assert!(g_closed(0).is_zero() && g_closed(1).is_zero());
        assert_eq!(g_closed(2), Poly1::one());
        assert_eq!(g_closed(3), Poly1::x().scale(&LaurentPoly::q_pow(-1)));
        assert_eq!(g_recursive(0), Poly1::zero());
        assert_eq!(g_recursive(2), Poly1::one());
        assert_eq!(g_recursive(4), g_closed(4));
    }

    #[test]
    fn tn1_t01_examples() {
        assert_eq!(mul_tn1_t01(0).unwrap(), el(&[(t(0, 2), "1"), (ONE, "2")]));
        assert_eq!(
            mul_tn1_t01(1).unwrap(),
            el(&[(t(1, 2), "q"), (t(1, 0), "q^-1")])
        );
        assert_eq!(
            mul_tn1_t01(2).unwrap(),
            el(&[(t(2, 2), "q^2"), (t(2, 0), "q^-2"), (U, "1"), (ONE, "q^2 + q^-2")])
        );
    }

    #[test]
    fn induction_step_small() {
        for n in 2..6 {
            let lhs = left_mul_t10(&mul_tn1_t01(n).unwrap()).unwrap();
            let mut rhs = mul_tn1_t01(n + 1).unwrap().shift(1);
            rhs.add_scaled(&mul_tn1_t01(n - 1).unwrap(), &LaurentPoly::q_pow(-1))
                .unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn extract_examples() {
        let (e, x) = upper_bound_extract(&PolySeq::s(), 3).unwrap();
        assert_eq!(e, -3);
        assert_eq!(x, PTorusElement::from_label(Basis::S, t(3, 0)));

        let (e, x) = upper_bound_extract(&PolySeq::monomial(), 2).unwrap();
        assert_eq!(e, -2);
        let expect = PTorusElement::from_terms(
            Basis::Monomial,
            [(t(2, 0), LaurentPoly::one()), (ONE, LaurentPoly::constant(-1))],
        );
        assert_eq!(x, expect);
        assert!(!x.is_positive());

        let (e, _) = upper_bound_extract(&PolySeq::s(), 0).unwrap();
        assert_eq!(e, 0);

        let shifted = PolySeq::from_table(
            "shifted",
            vec![Poly1::one(), Poly1::from_ints(&[1, 1]), Poly1::from_ints(&[0, 0, 1])],
        )
        .unwrap();
        assert!(upper_bound_extract(&shifted, 2).is_err());
    }

    #[test]
    fn unsupported_pairs() {
        let a = PTorusElement::from_label(Basis::THat, t(2, 1));
        let b = PTorusElement::from_label(Basis::THat, t(1, 3));
        assert!(matches!(mul(&a, &b), Err(SkeinError::NoProductRule(_))));
    }

    #[test]
    fn label_parsing_and_rendering() {
        assert_eq!("T(2,1)".parse::<PTorusLabel>().unwrap(), t(2, 1));
        assert_eq!("(0,1)*U^2".parse::<PTorusLabel>().unwrap(), t(0, 1).with_u(2));
        assert_eq!("U".parse::<PTorusLabel>().unwrap(), U);
        assert_eq!("1".parse::<PTorusLabel>().unwrap(), ONE);
        let err = "T(2,x)".parse::<PTorusLabel>().unwrap_err();
        assert!(matches!(err, SkeinError::Parse { pos: 4, .. }), "{err:?}");
        assert_eq!(t(4, 2).with_u(2).render(&Basis::S), "S(4,2)*S2(U)");
        assert_eq!(t(1, 1).with_u(3).render(&Basis::Monomial), "(1,1)*U^3");
        let v = t(3, 1).to_json();
        assert_eq!(v, json!({"slope": "(3,1)", "u": 0}));
        assert_eq!(PTorusLabel::from_json(&v).unwrap(), t(3, 1));
        assert_eq!(PTorusLabel::from_json(&ONE.to_json()).unwrap(), ONE);
    }
}
