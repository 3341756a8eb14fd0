//! Positivity verdicts and the witnesses that refute them.

use std::fmt;

use serde_json::{json, Value};

use crate::laurent::LaurentPoly;
use crate::torus::TorusLabel;

/// The product a witness coefficient was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    /// `a · b` of two torus labels in the scanned flavor.
    Torus { a: TorusLabel, b: TorusLabel },
    /// `P_i(z) P_j(z)` in the one-variable subalgebra of an annulus.
    Annulus { i: usize, j: usize },
    /// `P_n(a) P_1(b)` on the four-punctured sphere.
    S04Lower { n: usize },
    /// `P_1(a) P_1(b)` on the four-punctured sphere with `P_1 = x + δ`.
    P1Forcing { delta: i64 },
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Torus { a, b } => write!(f, "{a} * {b}"),
            Product::Annulus { i, j } => write!(f, "P{i}(z) * P{j}(z)"),
            Product::S04Lower { n } => write!(f, "P{n}(a) * P1(b)"),
            Product::P1Forcing { .. } => f.write_str("P1(a) * P1(b)"),
        }
    }
}

/// A coefficient outside ℤ₊[q^±1].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub product: Product,
    pub label: String,
    pub coeff: LaurentPoly,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "product": self.product.to_string(),
            "label": self.label,
            "coeff": self.coeff.to_json(),
        });
        match &self.product {
            Product::Torus { a, b } => {
                v["a"] = Value::String(a.to_string());
                v["b"] = Value::String(b.to_string());
            }
            Product::Annulus { i, j } => {
                v["i"] = json!(i);
                v["j"] = json!(j);
            }
            Product::S04Lower { n } => v["n"] = json!(n),
            Product::P1Forcing { delta } => v["delta"] = json!(delta),
        }
        v
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: coefficient of {} is {}", self.product, self.label, self.coeff)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub surface: String,
    pub sequence: String,
    pub bound: usize,
    pub q1: bool,
    pub witnesses: Vec<Witness>,
}

impl PositivityReport {
    pub fn new(
        surface: &str,
        sequence: &str,
        bound: usize,
        q1: bool,
        witnesses: Vec<Witness>,
    ) -> Self {
        Self {
            surface: surface.into(),
            sequence: sequence.into(),
            bound,
            q1,
            witnesses,
        }
    }

    pub fn is_certified(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.is_certified() {
            "certified"
        } else {
            "violation"
        }
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "surface": self.surface,
            "sequence": self.sequence,
            "bound": self.bound,
            "q_equals_1": self.q1,
            "verdict": self.verdict(),
            "witnesses": self.witnesses.iter().map(Witness::to_json).collect::<Vec<_>>(),
        })
    }
}
