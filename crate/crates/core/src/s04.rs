//! Products on the four-punctured sphere.
//!
//! With `a = (1,0)`, `b_n = (n,1)` and `γ_1..γ_4` the peripheral curves,
//! the families below are supported:
//!
//! * `a b_n = q^2 b_{n+1} + q^-2 b_{n-1} + c_n`;
//! * `T_n(a) b = q^{2n} b_n + q^{-2n} b_{-n} + c_0 f_n + c_1 g_n`;
//! * `S_{1,0} S_{m,2}` in both parities;
//! * `S_{n,1} S_{0,1}` by recursion on `n`, split as
//!   `q^{2n} S_{n,2} + q^{-2n} S_{n,0} + g_n + h_n`.
//!
//! `c_0 = γ1γ3 + γ2γ4`, `c_1 = γ1γ4 + γ2γ3` and `c_n` depends on the parity
//! of `n`; the half twist `σ` moves `c_n` to `c_{n+1}`.

use std::fmt;

use serde_json::{json, Value};

use crate::curves::{parse_pair, CurveClass, MappingClass};
use crate::element::{self, linearize, Label, SkeinElement};
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;
use crate::polyseq::{Basis, Poly1, PolySeq};
use crate::ptorus::render_peripheral;
use crate::report::{PositivityReport, Product, Witness};

/// A non-peripheral slope with multiplicity `gcd`, and powers of the four
/// peripheral curves.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct S04Label {
    pub slope: Option<CurveClass>,
    pub g: [u32; 4],
}

impl S04Label {
    pub const EMPTY: S04Label = S04Label {
        slope: None,
        g: [0; 4],
    };

    pub fn slope(r: i64, s: i64) -> Self {
        Self {
            slope: CurveClass::try_new(r, s),
            g: [0; 4],
        }
    }

    pub fn gammas(g: [u32; 4]) -> Self {
        Self { slope: None, g }
    }

    pub fn with_g(self, g: [u32; 4]) -> Self {
        Self { g, ..self }
    }

    /// The half twist `σ^k`: slopes move by `[[1,k],[0,1]]`, punctures 1 and
    /// 2 swap when `k` is odd.
    pub fn sigma(&self, k: i64) -> Self {
        let m = MappingClass::sigma_pow(k);
        let mut g = self.g;
        if k.rem_euclid(2) == 1 {
            g.swap(0, 1);
        }
        Self {
            slope: self.slope.map(|c| m.apply(&c)),
            g,
        }
    }
}

impl fmt::Display for S04Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Basis::THat))
    }
}

impl fmt::Debug for S04Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for S04Label {
    type Err = SkeinError;

    /// Factors joined by `*`: `1`, `g1`..`g4` with optional `^k`, or a slope
    /// `(r,s)` with an optional flavor letter in front.
    fn from_str(input: &str) -> Result<Self> {
        let mut label = S04Label::EMPTY;
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
            if let Some(rest) = t.strip_prefix('g') {
                let (idx, pow) = match rest.split_once('^') {
                    Some((i, p)) => (i, p.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (rest, 1),
                };
                let i = match idx {
                    "1" | "2" | "3" | "4" => idx.parse::<usize>().unwrap() - 1,
                    _ => return Err(err("peripheral curves are g1..g4")),
                };
                label.g[i] += pow;
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

impl Label for S04Label {
    const SURFACE: &'static str = "s04";

    fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![self.slope.map_or(0, |c| c.multiplicity())];
        m.extend(self.g);
        m
    }

    fn with_multiplicities(&self, m: &[u32]) -> Self {
        let slope = match self.slope {
            Some(c) => c.primitive().scaled(m[0]),
            None => {
                assert_eq!(m[0], 0, "no essential component to scale");
                None
            }
        };
        Self {
            slope,
            g: [m[1], m[2], m[3], m[4]],
        }
    }

    fn is_empty_curve(&self) -> bool {
        *self == Self::EMPTY
    }

    fn render(&self, basis: &Basis) -> String {
        let mut parts = Vec::new();
        if let Some(c) = self.slope {
            parts.push(format!("{}{c}", basis.prefix()));
        }
        for (i, &k) in self.g.iter().enumerate() {
            parts.extend(render_peripheral(&format!("g{}", i + 1), k, basis));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "slope": self.slope.map(|c| c.to_string()),
            "g": self.g,
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let slope = match v.get("slope") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.parse::<CurveClass>()?),
            Some(_) => return Err(SkeinError::Json("slope must be a string or null".into())),
        };
        let bad = || SkeinError::Json("g must be four nonnegative integers".into());
        let arr = v.get("g").and_then(Value::as_array).ok_or_else(bad)?;
        if arr.len() != 4 {
            return Err(bad());
        }
        let mut g = [0u32; 4];
        for (slot, x) in g.iter_mut().zip(arr) {
            *slot = x.as_u64().ok_or_else(bad)? as u32;
        }
        Ok(Self { slope, g })
    }
}

pub type S04Element = SkeinElement<S04Label>;

fn b(n: i64) -> S04Label {
    S04Label::slope(n, 1)
}

fn gsum(basis: &Basis, pairs: [[u32; 4]; 2]) -> S04Element {
    S04Element::from_terms(
        basis.clone(),
        pairs.map(|g| (S04Label::gammas(g), LaurentPoly::one())),
    )
}

/// `γ1γ3 + γ2γ4`.
pub fn c0(basis: &Basis) -> S04Element {
    gsum(basis, [[1, 0, 1, 0], [0, 1, 0, 1]])
}

/// `γ1γ4 + γ2γ3`.
pub fn c1(basis: &Basis) -> S04Element {
    gsum(basis, [[1, 0, 0, 1], [0, 1, 1, 0]])
}

pub fn c_n(n: i64, basis: &Basis) -> S04Element {
    if n.rem_euclid(2) == 0 {
        c0(basis)
    } else {
        c1(basis)
    }
}

/// `γ1γ2 + γ3γ4`, the part fixed by the half twist.
pub fn e12(basis: &Basis) -> S04Element {
    gsum(basis, [[1, 1, 0, 0], [0, 0, 1, 1]])
}

/// `Γ = γ1γ2γ3γ4 + γ1² + γ2² + γ3² + γ4² - 2`, written in the flavor of `seq`.
pub fn gamma_big(seq: &PolySeq) -> Result<S04Element> {
    let mut x = S04Element::from_term(
        Basis::Monomial,
        S04Label::gammas([1, 1, 1, 1]),
        LaurentPoly::one(),
    );
    for i in 0..4 {
        let mut g = [0; 4];
        g[i] = 2;
        x.add_term(S04Label::gammas(g), LaurentPoly::one());
    }
    x.add_term(S04Label::EMPTY, LaurentPoly::constant(-2));
    element::convert(&x, &PolySeq::monomial(), seq)
}

/// Applies `σ^k` to every label.
pub fn apply_sigma(x: &S04Element, k: i64) -> S04Element {
    x.map_labels(|l| l.sigma(k))
}

/// Multiplies every term by the peripheral monomial `Π P_{g_i}(γ_i)` of the
/// flavor `seq`.
pub fn mul_peripheral(x: &S04Element, g: [u32; 4], seq: &PolySeq) -> Result<S04Element> {
    let mut out = x.clone();
    for i in 0..4 {
        if g[i] == 0 {
            continue;
        }
        let mut next = S04Element::zero(x.basis().clone());
        for (l, c) in out.terms() {
            for (k, ck) in linearize(seq, l.g[i], g[i])? {
                let mut lg = l.g;
                lg[i] = k;
                next.add_term(l.with_g(lg), c * &ck);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Multiplies every term by a peripheral element (a combination of
/// slope-free labels) of the same flavor.
fn mul_by_peripheral_element(x: &S04Element, p: &S04Element, seq: &PolySeq) -> Result<S04Element> {
    let mut out = S04Element::zero(x.basis().clone());
    for (l, c) in p.terms() {
        debug_assert!(l.slope.is_none());
        out.add_scaled(&mul_peripheral(x, l.g, seq)?, c)?;
    }
    Ok(out)
}

/// `a b_n`.
pub fn mul_a_bn(n: i64) -> S04Element {
    let mut out = S04Element::from_term(Basis::THat, b(n + 1), LaurentPoly::q_pow(2));
    out.add_term(b(n - 1), LaurentPoly::q_pow(-2));
    out.add_scaled(&c_n(n, &Basis::THat), &LaurentPoly::one())
        .expect("same flavor");
    out
}

/// Coefficients of `f_n` (odd `i`) or `g_n` (even `i`) in the `T̂` basis of
/// `a`: entry `k` multiplies `T̂_k(a)`.
pub fn fg_coeffs(n: usize, odd: bool) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); n.max(1)];
    for i in 1..=n {
        if (i % 2 == 1) == odd {
            out[n - i] += LaurentPoly::quantum_int(i as i64).expect("i >= 1");
        }
    }
    while out.last().is_some_and(LaurentPoly::is_zero) {
        out.pop();
    }
    out
}

fn poly_in_a(coeffs: &[LaurentPoly], basis: &Basis) -> S04Element {
    S04Element::from_terms(
        basis.clone(),
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (S04Label::slope(k as i64, 0), c.clone())),
    )
}

/// `T_n(a) b`, with the unnormalized `T_0 = 2`.
pub fn mul_tna_b(n: usize) -> S04Element {
    let that = PolySeq::t_hat();
    let n_i = n as i64;
    let mut out = S04Element::from_term(Basis::THat, b(n_i), LaurentPoly::q_pow(2 * n_i));
    out.add_term(b(-n_i), LaurentPoly::q_pow(-2 * n_i));
    for (c, odd) in [(c0(&Basis::THat), true), (c1(&Basis::THat), false)] {
        let f = poly_in_a(&fg_coeffs(n, odd), &Basis::THat);
        let prod = mul_by_peripheral_element(&f, &c, &that).expect("T̂ linearizes");
        out.add_scaled(&prod, &LaurentPoly::one()).expect("same flavor");
    }
    out
}

/// `a · x` in the `T̂` flavor for `x` built from slopes `(k,0)`, `b_m` and
/// peripheral curves.
pub fn left_mul_a(x: &S04Element) -> Result<S04Element> {
    let that = PolySeq::t_hat();
    let mut out = S04Element::zero(Basis::THat);
    for (l, c) in x.terms() {
        let core = match l.slope {
            None => S04Element::from_label(Basis::THat, S04Label::slope(1, 0)),
            Some(s) if s.s() == 0 => {
                let mut e = S04Element::zero(Basis::THat);
                for (k, ck) in linearize(&that, 1, s.multiplicity())? {
                    e.add_term(S04Label::slope(k as i64, 0), ck);
                }
                e
            }
            Some(s) if s.s() == 1 => mul_a_bn(s.r()),
            Some(s) => {
                return Err(SkeinError::NoProductRule(format!(
                    "(1,0) * {s} on the four-punctured sphere"
                )))
            }
        };
        out.add_scaled(&mul_peripheral(&core, l.g, &that)?, c)?;
    }
    Ok(out)
}

/// `T_n(a) b` expanded from `T_n = a T_{n-1} - T_{n-2}` and repeated use of
/// [`mul_a_bn`]; an independent route to [`mul_tna_b`].
pub fn mul_tna_b_by_recurrence(n: usize) -> Result<S04Element> {
    let bb = S04Element::from_label(Basis::THat, b(0));
    let mut prev = bb.scale(&LaurentPoly::constant(2));
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = left_mul_a(&bb)?;
    for _ in 2..=n {
        let next = left_mul_a(&cur)?.try_sub(&prev)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `S_{1,0} S_{m,2}`, in the `S` flavor.
pub fn mul_s10_sm2(m: i64) -> Result<S04Element> {
    let s = PolySeq::s();
    let basis = Basis::S;
    let k = m.div_euclid(2);
    let on = |slope: S04Label, c: &S04Element| mul_by_peripheral_element(
        &S04Element::from_label(basis.clone(), slope),
        c,
        &s,
    );
    let mut out = S04Element::from_term(basis.clone(), S04Label::slope(m + 1, 2), LaurentPoly::q_pow(4));
    out.add_term(S04Label::slope(m - 1, 2), LaurentPoly::q_pow(-4));
    if m.rem_euclid(2) == 0 {
        out.add_scaled(&on(b(k), &c_n(k, &basis))?, &LaurentPoly::one())?;
        out.add_term(S04Label::slope(1, 0), LaurentPoly::one());
        out.add_scaled(&e12(&basis), &LaurentPoly::from_terms([(-2, 1), (2, 1)]))?;
    } else {
        out.add_scaled(&on(b(k + 1), &c_n(k, &basis))?, &LaurentPoly::q_pow(2))?;
        out.add_scaled(&on(b(k), &c_n(k + 1, &basis))?, &LaurentPoly::q_pow(-2))?;
        out.add_scaled(&gamma_big(&s)?, &LaurentPoly::one())?;
    }
    Ok(out)
}

/// `S_{1,0} · x` in the `S` flavor for `x` built from slopes `(k,0)`,
/// `(m,1)`, `(m,2)` and peripheral curves.
pub fn left_mul_s10(x: &S04Element) -> Result<S04Element> {
    let s = PolySeq::s();
    let basis = Basis::S;
    if *x.basis() != basis {
        return Err(SkeinError::BasisMismatch {
            expected: basis.id(),
            found: x.basis().id(),
        });
    }
    let mut out = S04Element::zero(basis.clone());
    for (l, c) in x.terms() {
        let core = match l.slope {
            None => S04Element::from_label(basis.clone(), S04Label::slope(1, 0)),
            Some(sl) if sl.s() == 0 => {
                let mut e = S04Element::zero(basis.clone());
                for (k, ck) in linearize(&s, 1, sl.multiplicity())? {
                    e.add_term(S04Label::slope(k as i64, 0), ck);
                }
                e
            }
            Some(sl) if sl.s() == 1 => {
                let m = sl.r();
                let mut e = S04Element::from_term(basis.clone(), b(m + 1), LaurentPoly::q_pow(2));
                e.add_term(b(m - 1), LaurentPoly::q_pow(-2));
                e.add_scaled(&c_n(m, &basis), &LaurentPoly::one())?;
                e
            }
            Some(sl) if sl.s() == 2 => mul_s10_sm2(sl.r())?,
            Some(sl) => {
                return Err(SkeinError::NoProductRule(format!(
                    "S(1,0) * S{sl} on the four-punctured sphere"
                )))
            }
        };
        out.add_scaled(&mul_peripheral(&core, l.g, &s)?, c)?;
    }
    Ok(out)
}

fn mul_slopes(a: CurveClass, b: CurveClass, basis: &Basis) -> Result<S04Element> {
    let seq = basis
        .builtin_seq()
        .ok_or_else(|| SkeinError::InvalidArgument(format!("no product rules in {basis}")))?;
    if a.primitive() == b.primitive() {
        let p = a.primitive();
        let mut out = S04Element::zero(basis.clone());
        for (k, c) in linearize(&seq, a.multiplicity(), b.multiplicity())? {
            let label = S04Label {
                slope: p.scaled(k),
                g: [0; 4],
            };
            out.add_term(label, c);
        }
        return Ok(out);
    }
    let b_el = S04Element::from_label(basis.clone(), S04Label { slope: Some(b), g: [0; 4] });
    let a10 = a == CurveClass::new(1, 0)?;
    match basis {
        Basis::S if a10 => left_mul_s10(&b_el),
        Basis::S if b == CurveClass::new(0, 1)? && a.s() == 1 && a.r() >= 0 => {
            Ok(mul_sn1_s01(a.r() as usize)?.0)
        }
        Basis::THat if a10 => left_mul_a(&b_el),
        _ => Err(SkeinError::NoProductRule(format!(
            "{0}{a} * {0}{b} on the four-punctured sphere",
            basis.prefix()
        ))),
    }
}

fn mul_labels(a: &S04Label, b: &S04Label, basis: &Basis, seq: &PolySeq) -> Result<S04Element> {
    let core = match (a.slope, b.slope) {
        (Some(x), Some(y)) => mul_slopes(x, y, basis)?,
        (x, y) => S04Element::from_label(
            basis.clone(),
            S04Label {
                slope: x.or(y),
                g: [0; 4],
            },
        ),
    };
    mul_peripheral(&mul_peripheral(&core, a.g, seq)?, b.g, seq)
}

/// Bilinear product in the `S` or `T̂` flavor, defined on the label pairs the
/// relations above cover: parallel slopes, peripheral factors,
/// `(1,0) · (m,s)` for `s <= 2` (`s <= 1` in `T̂`) and, in `S`,
/// `(n,1) · (0,1)`.
pub fn mul(x: &S04Element, y: &S04Element) -> Result<S04Element> {
    if x.basis() != y.basis() {
        return Err(SkeinError::BasisMismatch {
            expected: x.basis().id(),
            found: y.basis().id(),
        });
    }
    let basis = x.basis().clone();
    if basis != Basis::S && basis != Basis::THat {
        return Err(SkeinError::BasisMismatch {
            expected: Basis::S.id(),
            found: basis.id(),
        });
    }
    let seq = basis.builtin_seq().expect("builtin");
    let mut out = S04Element::zero(basis.clone());
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&mul_labels(a, b, &basis, &seq)?, &(ca * cb))?;
        }
    }
    Ok(out)
}

/// The closed form of `g_n`, in the `S` flavor.
pub fn g_s04_closed(n: usize) -> Result<S04Element> {
    let basis = Basis::S;
    let s = PolySeq::s();
    let mut out = S04Element::zero(basis.clone());
    for i in 1..=n / 2 {
        for j in i..=n - i {
            let cj = c_n((n - j + 1) as i64, &basis);
            let term = mul_by_peripheral_element(
                &S04Element::from_label(basis.clone(), b(j as i64)),
                &cj,
                &s,
            )?;
            out.add_scaled(&term, &LaurentPoly::q_pow(4 * i as i64 - 2))?;
        }
    }
    Ok(out)
}

/// `S_{n,1} S_{0,1}` for `n = 0..=n_max`, by the recursion
/// `X_{n+1} = q^-2 S_{1,0} X_n - q^-4 X_{n-1} - q^-2 c_n S_{0,1}`.
pub fn products_sn1_s01(n_max: usize) -> Result<Vec<S04Element>> {
    let basis = Basis::S;
    let s = PolySeq::s();
    let mut x0 = S04Element::from_label(basis.clone(), S04Label::slope(0, 2));
    x0.add_term(S04Label::EMPTY, LaurentPoly::one());
    let mut x1 = S04Element::from_term(basis.clone(), S04Label::slope(1, 2), LaurentPoly::q_pow(2));
    x1.add_term(S04Label::slope(1, 0), LaurentPoly::q_pow(-2));
    x1.add_scaled(&e12(&basis), &LaurentPoly::one())?;
    let mut out = vec![x0, x1];
    for m in 1..n_max {
        let mut next = left_mul_s10(&out[m])?.shift(-2);
        next.add_scaled(&out[m - 1], &LaurentPoly::monomial(-1, -4))?;
        let cs = mul_by_peripheral_element(
            &S04Element::from_label(basis.clone(), b(0)),
            &c_n(m as i64, &basis),
            &s,
        )?;
        next.add_scaled(&cs, &LaurentPoly::monomial(-1, -2))?;
        out.push(next);
    }
    out.truncate(n_max + 1);
    Ok(out)
}

/// `h_n = S_{n,1} S_{0,1} - q^{2n} S_{n,2} - q^{-2n} S_{n,0} - g_n`.
pub fn h_from_full(n: usize, full: &S04Element) -> Result<S04Element> {
    let n_i = n as i64;
    let mut h = full.clone();
    h.add_term(S04Label::slope(n_i, 2), LaurentPoly::monomial(-1, 2 * n_i));
    h.add_term(S04Label::slope(n_i, 0), LaurentPoly::monomial(-1, -2 * n_i));
    h.add_scaled(&g_s04_closed(n)?, &LaurentPoly::constant(-1))?;
    Ok(h)
}

/// `(S_{n,1} S_{0,1}, h_n)`.
pub fn mul_sn1_s01(n: usize) -> Result<(S04Element, S04Element)> {
    let full = products_sn1_s01(n)?.pop().expect("n_max + 1 entries");
    let h = h_from_full(n, &full)?;
    Ok((full, h))
}

/// Ways in which `h_n` departs from the lemma's description: labels other
/// than slopes `(k,0)` and peripheral curves, or `q`-exponents outside
/// `[-2n+2, 2n-2]`.
pub fn h_violations(n: usize, h: &S04Element) -> Vec<String> {
    let bound = 2 * n as i64 - 2;
    let mut out = Vec::new();
    for (l, c) in h.terms() {
        if l.slope.is_some_and(|s| s.s() != 0) {
            out.push(format!("h_{n} has label {}", l.render(h.basis())));
        }
        if let Some((lo, hi)) = c.q_degree_range() {
            if lo < -bound || hi > bound {
                out.push(format!(
                    "h_{n} coefficient of {} has q-degrees [{lo}, {hi}]",
                    l.render(h.basis())
                ));
            }
        }
    }
    out
}

/// The lowest power of `q` in `S_{n,1} S_{0,1}` and its integer part.
pub fn lowest_q_term_s04(n: usize) -> Result<(i64, S04Element)> {
    if n == 0 {
        return Err(SkeinError::InvalidArgument("n must be positive".into()));
    }
    let (full, _) = mul_sn1_s01(n)?;
    full.lowest_q_part()
        .ok_or_else(|| SkeinError::InvalidArgument("product vanished".into()))
}

/// `P_1(a) P_1(b)` for a sequence with `P_1 = x + δ`, written in `B_P`.
#[derive(Clone, Debug)]
pub struct P1Forcing {
    pub delta: i64,
    pub product: S04Element,
    /// The `P_1(γ1)` label and its coefficient `-δ`.
    pub gamma: (S04Label, LaurentPoly),
    /// The `P_1(a)` label and its coefficient `δ`.
    pub a: (S04Label, LaurentPoly),
}

impl P1Forcing {
    pub fn report(&self) -> PositivityReport {
        let product = Product::P1Forcing { delta: self.delta };
        let witnesses = [&self.gamma, &self.a]
            .into_iter()
            .filter(|(_, c)| !c.is_positive())
            .map(|(l, c)| Witness {
                product: product.clone(),
                label: l.render(self.product.basis()),
                coeff: c.clone(),
            })
            .collect();
        PositivityReport::new(S04Label::SURFACE, &forcing_name(self.delta), 1, false, witnesses)
    }
}

fn forcing_name(delta: i64) -> String {
    format!("x{delta:+}")
}

pub fn p1_forcing_witness(delta: i64) -> Result<P1Forcing> {
    if delta == 0 {
        return Err(SkeinError::InvalidArgument("δ must be nonzero".into()));
    }
    let p = PolySeq::from_table(
        &forcing_name(delta),
        vec![Poly1::one(), Poly1::from_ints(&[delta, 1])],
    )?;
    // (a + δ)(b + δ) = ab + δa + δb + δ² with plain curves
    let mut x = mul_a_bn(0).retag(Basis::Monomial)?;
    let d = LaurentPoly::constant(delta);
    x.add_term(S04Label::slope(1, 0), d.clone());
    x.add_term(S04Label::slope(0, 1), d.clone());
    x.add_term(S04Label::EMPTY, &d * &d);
    let product = element::convert(&x, &PolySeq::monomial(), &p)?;
    let gl = S04Label::gammas([1, 0, 0, 0]);
    let al = S04Label::slope(1, 0);
    Ok(P1Forcing {
        delta,
        gamma: (gl, product.coeff(&gl)),
        a: (al, product.coeff(&al)),
        product,
    })
}
