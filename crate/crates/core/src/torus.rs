//! The skein algebra of the closed torus.
//!
//! In the normalized first-kind Chebyshev basis every product of two basis
//! elements has (at most) two terms:
//!
//! ```text
//! (r,s)_T (u,v)_T = q^D (r+u, s+v)_T + q^-D (r-u, s-v)_T,   D = rv - us,
//! ```
//!
//! where a `(0,0)_T` on the right counts as `2` (this convention is local to
//! the product; everywhere else the empty label is `T̂_0 = 1`). All other
//! flavors multiply by converting through `T̂`.

use std::fmt;

use rayon::prelude::*;
use serde_json::Value;

use crate::curves::{CurveClass, MappingClass};
use crate::element::{self, Label, SkeinElement};
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;
use crate::polyseq::{Basis, PolySeq};
use crate::report::{PositivityReport, Product, Witness};

/// A basis label on the closed torus: the empty multicurve or `d` parallel
/// copies of a primitive slope, recorded as the slope `d·(r,s)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusLabel {
    Empty,
    Slope(CurveClass),
}

impl TorusLabel {
    pub fn slope(r: i64, s: i64) -> Self {
        CurveClass::try_new(r, s).map_or(TorusLabel::Empty, TorusLabel::Slope)
    }

    pub fn apply(&self, m: &MappingClass) -> Self {
        match self {
            TorusLabel::Empty => TorusLabel::Empty,
            TorusLabel::Slope(c) => TorusLabel::Slope(m.apply(c)),
        }
    }
}

impl fmt::Display for TorusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusLabel::Empty => f.write_str("1"),
            TorusLabel::Slope(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Debug for TorusLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for TorusLabel {
    type Err = SkeinError;

    /// `1` for the empty label, otherwise `(r,s)` with an optional flavor
    /// letter in front (`T(2,1)`).
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "1" {
            return Ok(TorusLabel::Empty);
        }
        let pair = s.trim_start().trim_start_matches(|c: char| c.is_ascii_alphabetic());
        let skipped = s.len() - pair.len();
        let c: CurveClass = pair.parse().map_err(|e| match e {
            SkeinError::Parse { pos, msg, .. } => SkeinError::Parse {
                input: s.into(),
                pos: pos + skipped,
                msg,
            },
            other => other,
        })?;
        Ok(TorusLabel::Slope(c))
    }
}

impl Label for TorusLabel {
    const SURFACE: &'static str = "t10";

    fn multiplicities(&self) -> Vec<u32> {
        match self {
            TorusLabel::Empty => vec![0],
            TorusLabel::Slope(c) => vec![c.multiplicity()],
        }
    }

    fn with_multiplicities(&self, m: &[u32]) -> Self {
        match self {
            TorusLabel::Empty => {
                assert_eq!(m[0], 0, "empty label has no direction to scale");
                TorusLabel::Empty
            }
            TorusLabel::Slope(c) => c
                .primitive()
                .scaled(m[0])
                .map_or(TorusLabel::Empty, TorusLabel::Slope),
        }
    }

    fn is_empty_curve(&self) -> bool {
        *self == TorusLabel::Empty
    }

    fn render(&self, basis: &Basis) -> String {
        match self {
            TorusLabel::Empty => "1".into(),
            TorusLabel::Slope(c) => format!("{c}{}", basis.suffix()),
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .ok_or_else(|| SkeinError::Json("torus label must be a string".into()))?
            .parse()
    }
}

pub type TorusElement = SkeinElement<TorusLabel>;

/// Product of two `T̂`-basis labels.
pub fn fg_mul(a: &TorusLabel, b: &TorusLabel) -> TorusElement {
    let mut out = TorusElement::zero(Basis::THat);
    let (TorusLabel::Slope(x), TorusLabel::Slope(y)) = (a, b) else {
        let label = if *a == TorusLabel::Empty { *b } else { *a };
        out.add_term(label, LaurentPoly::one());
        return out;
    };
    let (r, s) = (x.r(), x.s());
    let (u, v) = (y.r(), y.s());
    let d = r * v - u * s;
    for ((p, t), exp) in [((r + u, s + v), d), ((r - u, s - v), -d)] {
        match CurveClass::try_new(p, t) {
            Some(c) => out.add_term(TorusLabel::Slope(c), LaurentPoly::q_pow(exp)),
            None => out.add_term(TorusLabel::Empty, LaurentPoly::monomial(2, exp)),
        }
    }
    out
}

/// Bilinear extension of [`fg_mul`]; both factors must be in `T̂`.
pub fn mul(x: &TorusElement, y: &TorusElement) -> Result<TorusElement> {
    for e in [x, y] {
        if *e.basis() != Basis::THat {
            return Err(SkeinError::BasisMismatch {
                expected: Basis::THat.id(),
                found: e.basis().id(),
            });
        }
    }
    let mut out = TorusElement::zero(Basis::THat);
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            out.add_scaled(&fg_mul(a, b), &(ca * cb))?;
        }
    }
    Ok(out)
}

pub fn convert(x: &TorusElement, source: &PolySeq, target: &PolySeq) -> Result<TorusElement> {
    element::convert(x, source, target)
}

/// Applies a mapping class to every label.
pub fn apply_mapping_class(m: &MappingClass, x: &TorusElement) -> TorusElement {
    x.map_labels(|l| l.apply(m))
}

/// `a · b` for labels read in flavor `P`, expanded back in `P`.
pub fn structure_constants(p: &PolySeq, a: &TorusLabel, b: &TorusLabel) -> Result<TorusElement> {
    let basis = p.basis()?;
    let that = PolySeq::t_hat();
    let xa = convert(&TorusElement::from_label(basis.clone(), *a), p, &that)?;
    let xb = convert(&TorusElement::from_label(basis, *b), p, &that)?;
    convert(&mul(&xa, &xb)?, &that, p)
}

/// The empty label followed by every canonical slope with `|r|, |s| <= bound`,
/// in label order.
pub fn labels_in_box(bound: i64) -> Vec<TorusLabel> {
    let mut out = vec![TorusLabel::Empty];
    for s in 0..=bound {
        for r in -bound..=bound {
            if s > 0 || r > 0 {
                out.push(TorusLabel::slope(r, s));
            }
        }
    }
    out
}

/// Checks every structure constant of `B_P` over the label box. With `q1`
/// the coefficients are specialized to `q = 1` first. Violations are listed
/// in scan order: first factor, then second factor, then result label.
pub fn positivity_scan(p: &PolySeq, bound: i64, q1: bool) -> Result<PositivityReport> {
    if bound < 1 {
        return Err(SkeinError::InvalidArgument("bound must be at least 1".into()));
    }
    let labels = labels_in_box(bound);
    let per_a: Vec<Result<Vec<Witness>>> = labels
        .par_iter()
        .map(|a| {
            let mut found = Vec::new();
            for b in &labels {
                let sc = structure_constants(p, a, b)?;
                let sc = if q1 { sc.specialize_q1() } else { sc };
                for (label, c) in sc.terms() {
                    if !c.is_positive() {
                        found.push(Witness {
                            product: Product::Torus { a: *a, b: *b },
                            label: label.to_string(),
                            coeff: c.clone(),
                        });
                    }
                }
            }
            Ok(found)
        })
        .collect();
    let mut witnesses = Vec::new();
    for w in per_a {
        witnesses.extend(w?);
    }
    Ok(PositivityReport::new(
        TorusLabel::SURFACE,
        p.name(),
        bound as usize,
        q1,
        witnesses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(r: i64, s: i64) -> TorusLabel {
        TorusLabel::slope(r, s)
    }

    fn elem(terms: &[(TorusLabel, &str)]) -> TorusElement {
        TorusElement::from_terms(
            Basis::THat,
            terms.iter().map(|(l, c)| (*l, c.parse().unwrap())),
        )
    }

    #[test]
    fn fg_examples() {
        assert_eq!(fg_mul(&t(1, 0), &t(0, 1)), elem(&[(t(1, 1), "q"), (t(1, -1), "q^-1")]));
        assert_eq!(
            fg_mul(&t(2, 1), &t(0, 1)),
            elem(&[(t(2, 2), "q^2"), (t(2, 0), "q^-2")])
        );
        assert_eq!(
            fg_mul(&t(1, 0), &t(1, 0)),
            elem(&[(t(2, 0), "1"), (TorusLabel::Empty, "2")])
        );
        assert_eq!(fg_mul(&TorusLabel::Empty, &t(3, 2)), elem(&[(t(3, 2), "1")]));
    }

    #[test]
    fn mul_examples() {
        let x = elem(&[(t(1, 1), "q")]);
        let one = elem(&[(TorusLabel::Empty, "1")]);
        assert_eq!(mul(&x, &one).unwrap(), x);
        assert!(mul(&TorusElement::zero(Basis::THat), &x).unwrap().is_zero());

        let s = elem(&[(t(1, 0), "1"), (t(0, 1), "1")]);
        let mut oracle = TorusElement::zero(Basis::THat);
        for a in [t(1, 0), t(0, 1)] {
            for b in [t(1, 0), t(0, 1)] {
                oracle.add_scaled(&fg_mul(&a, &b), &LaurentPoly::one()).unwrap();
            }
        }
        assert_eq!(mul(&s, &s).unwrap(), oracle);

        let in_s = TorusElement::from_label(Basis::S, t(1, 0));
        assert!(matches!(mul(&in_s, &x), Err(SkeinError::BasisMismatch { .. })));
    }

    #[test]
    fn convert_examples() {
        let mono = TorusElement::from_label(Basis::Monomial, t(2, 0));
        let that = convert(&mono, &PolySeq::monomial(), &PolySeq::t_hat()).unwrap();
        assert_eq!(that, elem(&[(t(2, 0), "1"), (TorusLabel::Empty, "2")]));

        let x = TorusElement::from_label(Basis::THat, t(2, 0));
        let in_s = convert(&x, &PolySeq::t_hat(), &PolySeq::s()).unwrap();
        let expect = TorusElement::from_terms(
            Basis::S,
            [(t(2, 0), LaurentPoly::one()), (TorusLabel::Empty, LaurentPoly::constant(-1))],
        );
        assert_eq!(in_s, expect);

        for (src, dst) in [
            (PolySeq::t_hat(), PolySeq::s()),
            (PolySeq::s(), PolySeq::monomial()),
            (PolySeq::monomial(), PolySeq::t_hat()),
        ] {
            let x = TorusElement::from_label(src.basis().unwrap(), t(3, -2));
            let y = convert(&x, &src, &dst).unwrap();
            assert_eq!(y.labels().collect::<Vec<_>>(), vec![&t(3, -2)]);
        }
    }

    #[test]
    fn structure_constant_examples() {
        let s = PolySeq::s();
        let sc = structure_constants(&s, &t(2, 1), &t(0, 1)).unwrap();
        let expect = TorusElement::from_terms(
            Basis::S,
            [
                (t(2, 2), "q^2".parse().unwrap()),
                (t(2, 0), "q^-2".parse().unwrap()),
                (TorusLabel::Empty, "-q^2 - q^-2".parse().unwrap()),
            ],
        );
        assert_eq!(sc, expect);

        let that = PolySeq::t_hat();
        for (a, b) in [(t(3, 1), t(-2, 5)), (t(4, 2), t(2, 0)), (t(1, 0), t(1, 0))] {
            let sc = structure_constants(&that, &a, &b).unwrap();
            assert!(sc.len() <= 2);
            assert!(sc.is_positive());
        }
        let sc = structure_constants(&s, &TorusLabel::Empty, &t(4, 6)).unwrap();
        assert_eq!(sc, TorusElement::from_label(Basis::S, t(4, 6)));
    }

    #[test]
    fn scan_small_boxes() {
        assert!(positivity_scan(&PolySeq::t_hat(), 4, false).unwrap().is_certified());
        assert!(!positivity_scan(&PolySeq::s(), 2, false).unwrap().is_certified());
        assert!(positivity_scan(&PolySeq::t_hat(), 0, false).is_err());
    }

    #[test]
    fn labels_in_box_order() {
        let l = labels_in_box(1);
        assert_eq!(l, vec![TorusLabel::Empty, t(1, 0), t(-1, 1), t(0, 1), t(1, 1)]);
        let mut sorted = labels_in_box(5);
        sorted.sort();
        assert_eq!(sorted, labels_in_box(5));
    }

    #[test]
    fn display() {
        let x = fg_mul(&t(2, 1), &t(0, 1));
        assert_eq!(x.to_string(), "q^-2*(2,0)_T + q^2*(2,2)_T");
        let y = fg_mul(&t(1, 0), &t(1, 0));
        assert_eq!(y.to_string(), "2 + (2,0)_T");
    }
}
