//! Finite ℤ[q^±1]-combinations of basis labels of one surface, tagged with the
//! basis flavor the labels are read in.
//!
//! A label records, for each component class of a simple multicurve, how many
//! parallel copies it has. In flavor `P` the label stands for the product of
//! `P_k(component)` over its components, so changing flavor is a
//! componentwise change of basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;
use crate::polyseq::{Basis, PolySeq};

/// A basis label of one of the surface algebras.
pub trait Label: Clone + Ord + Eq + std::hash::Hash + fmt::Debug + Send + Sync {
    /// Surface tag used in JSON: `t10`, `t11` or `s04`.
    const SURFACE: &'static str;

    /// Component multiplicities, in a fixed per-type order.
    fn multiplicities(&self) -> Vec<u32>;

    /// The label with the same component classes and new multiplicities.
    /// A zero entry drops that component.
    fn with_multiplicities(&self, m: &[u32]) -> Self;

    /// True for the empty multicurve.
    fn is_empty_curve(&self) -> bool;

    /// Plain-text rendering in the given flavor.
    fn render(&self, basis: &Basis) -> String;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkeinElement<L: Label> {
    basis: Basis,
    terms: BTreeMap<L, LaurentPoly>,
}

impl<L: Label> SkeinElement<L> {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_label(basis: Basis, label: L) -> Self {
        Self::from_term(basis, label, LaurentPoly::one())
    }

    pub fn from_term(basis: Basis, label: L, coeff: LaurentPoly) -> Self {
        let mut e = Self::zero(basis);
        e.add_term(label, coeff);
        e
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (L, LaurentPoly)>) -> Self {
        let mut e = Self::zero(basis);
        for (l, c) in terms {
            e.add_term(l, c);
        }
        e
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn add_term(&mut self, label: L, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(label) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in label order.
    pub fn terms(&self) -> impl Iterator<Item = (&L, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &L) -> LaurentPoly {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> + '_ {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_basis(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(SkeinError::BasisMismatch {
                expected: self.basis.id(),
                found: other.basis.id(),
            });
        }
        Ok(())
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &Self, coeff: &LaurentPoly) -> Result<()> {
        self.check_basis(other)?;
        if coeff.is_zero() {
            return Ok(());
        }
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * coeff);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1))?;
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(
            self.basis.clone(),
            self.terms.iter().map(|(l, v)| (l.clone(), v * c)),
        )
    }

    /// Multiplies every coefficient by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(
            self.basis.clone(),
            self.terms.iter().map(|(l, v)| (l.clone(), v.shift(k))),
        )
    }

    pub fn map_labels(&self, f: impl Fn(&L) -> L) -> Self {
        Self::from_terms(
            self.basis.clone(),
            self.terms.iter().map(|(l, v)| (f(l), v.clone())),
        )
    }

    /// Reinterprets the labels in another flavor. Only allowed when every
    /// component has multiplicity at most one, where all normalized flavors
    /// agree (`P_0 = 1`, `P_1 = x`).
    pub fn retag(&self, basis: Basis) -> Result<Self> {
        if let Some(l) = self
            .terms
            .keys()
            .find(|l| l.multiplicities().iter().any(|&m| m > 1))
        {
            return Err(SkeinError::InvalidArgument(format!(
                "label {} depends on the basis flavor",
                l.render(&self.basis)
            )));
        }
        Ok(Self {
            basis,
            terms: self.terms.clone(),
        })
    }

    /// Coefficients evaluated at `q = 1`, as constants.
    pub fn specialize_q1(&self) -> Self {
        Self::from_terms(
            self.basis.clone(),
            self.terms
                .iter()
                .map(|(l, v)| (l.clone(), LaurentPoly::constant(v.specialize_q1()))),
        )
    }

    pub fn is_positive(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_positive)
    }

    /// First term (in label order) whose coefficient is not in ℤ₊[q^±1].
    pub fn first_negative(&self) -> Option<(&L, &LaurentPoly)> {
        self.terms.iter().find(|(_, c)| !c.is_positive())
    }

    /// Splits by powers of `q`: for each exponent `e`, the element whose
    /// coefficients are the integer coefficients of `q^e`.
    pub fn group_by_q(&self) -> BTreeMap<i64, Self> {
        let mut out: BTreeMap<i64, Self> = BTreeMap::new();
        for (l, c) in &self.terms {
            for (e, v) in c.terms() {
                out.entry(e)
                    .or_insert_with(|| Self::zero(self.basis.clone()))
                    .add_term(l.clone(), LaurentPoly::constant(v.clone()));
            }
        }
        out
    }

    /// The lowest power of `q` present and its integer-coefficient part.
    pub fn lowest_q_part(&self) -> Option<(i64, Self)> {
        self.group_by_q().into_iter().next()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(l, c)| json!({"label": l.to_json(), "coeff": c.to_json()}))
            .collect();
        let mut obj = Map::new();
        obj.insert("surface".into(), Value::from(L::SURFACE));
        obj.insert("basis".into(), Value::from(self.basis.id()));
        obj.insert("terms".into(), Value::Array(terms));
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let surface = v.get("surface").and_then(Value::as_str).unwrap_or_default();
        if surface != L::SURFACE {
            return Err(SkeinError::Json(format!(
                "expected surface {:?}, found {surface:?}",
                L::SURFACE
            )));
        }
        let basis = Basis::from_id(
            v.get("basis")
                .and_then(Value::as_str)
                .ok_or_else(|| SkeinError::Json("missing basis".into()))?,
        )?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| SkeinError::Json("missing terms".into()))?;
        let mut e = Self::zero(basis);
        for t in terms {
            let label = L::from_json(
                t.get("label")
                    .ok_or_else(|| SkeinError::Json("term without label".into()))?,
            )?;
            let coeff = LaurentPoly::from_json(
                t.get("coeff")
                    .ok_or_else(|| SkeinError::Json("term without coeff".into()))?,
            )?;
            e.add_term(label, coeff);
        }
        Ok(e)
    }
}

impl<L: Label> fmt::Display for SkeinElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let term = render_term(&l.render(&self.basis), l.is_empty_curve(), c);
            if i == 0 {
                f.write_str(&term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl<L: Label> fmt::Debug for SkeinElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.basis, self)
    }
}

fn render_term(label: &str, unit: bool, c: &LaurentPoly) -> String {
    let single = c.len() == 1;
    if unit {
        return if single { c.to_string() } else { format!("({c})") };
    }
    if c.is_one() {
        label.to_string()
    } else if *c == LaurentPoly::constant(-1) {
        format!("-{label}")
    } else if single {
        format!("{c}*{label}")
    } else {
        format!("({c})*{label}")
    }
}

/// Rewrites `x` from flavor `source` to flavor `target`.
pub fn convert<L: Label>(
    x: &SkeinElement<L>,
    source: &PolySeq,
    target: &PolySeq,
) -> Result<SkeinElement<L>> {
    let src = source.basis()?;
    if src != x.basis {
        return Err(SkeinError::BasisMismatch {
            expected: x.basis.id(),
            found: src.id(),
        });
    }
    let dst = target.basis()?;
    if src == dst {
        return Ok(x.clone());
    }
    let mut out = SkeinElement::zero(dst);
    for (label, coeff) in &x.terms {
        let mults = label.multiplicities();
        let rows = mults
            .iter()
            .map(|&d| source.expansion_in(d as usize, target))
            .collect::<Result<Vec<_>>>()?;
        // cartesian product over the per-component expansions
        let mut partial: Vec<(Vec<u32>, LaurentPoly)> = vec![(Vec::new(), coeff.clone())];
        for row in &rows {
            let mut next = Vec::new();
            for (ks, c) in &partial {
                for (k, rc) in row.iter().enumerate() {
                    if rc.is_zero() {
                        continue;
                    }
                    let mut ks = ks.clone();
                    ks.push(k as u32);
                    next.push((ks, c * rc));
                }
            }
            partial = next;
        }
        for (ks, c) in partial {
            out.add_term(label.with_multiplicities(&ks), c);
        }
    }
    Ok(out)
}

/// [`convert`] for elements whose flavor is builtin.
pub fn to_basis<L: Label>(x: &SkeinElement<L>, target: &PolySeq) -> Result<SkeinElement<L>> {
    let source = x.basis.builtin_seq().ok_or_else(|| {
        SkeinError::InvalidArgument(format!(
            "element in {} needs its sequence to convert",
            x.basis
        ))
    })?;
    convert(x, &source, target)
}

/// Multiplies two single-component labels' multiplicities through the
/// linearization `P_i P_j = Σ c_k P_k`, returning `(k, c_k)` pairs.
pub(crate) fn linearize(seq: &PolySeq, i: u32, j: u32) -> Result<Vec<(u32, LaurentPoly)>> {
    if i == 0 {
        return Ok(vec![(j, LaurentPoly::one())]);
    }
    if j == 0 {
        return Ok(vec![(i, LaurentPoly::one())]);
    }
    Ok(seq
        .product_coeffs(i as usize, j as usize)?
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, c.clone()))
        .collect())
}

/// Integer coefficient of a grouped element, for reports.
pub fn integer_coeff<L: Label>(x: &SkeinElement<L>, label: &L) -> Option<BigInt> {
    x.coeff(label).as_constant()
}
