//! Bounded positivity certificates for the Chebyshev-type bases.
//!
//! Everything here is a finite check: perturbation boxes, degree bounds and
//! label boxes are part of every report, and a pass means "no violation up to
//! the bound", never the unbounded statement.

use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::element::Label;
use crate::error::{Result, SkeinError};
use crate::laurent::LaurentPoly;
use crate::polyseq::{chebyshev, expand_in, seq_leq, ChebKind, OrderVerdict, Poly1, PolySeq};
use crate::report::{PositivityReport, Product, Witness};
use crate::s04::{self, S04Element, S04Label};
use crate::torus::{self, TorusLabel};

/// Outcome of the perturbation search at one level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelOutcome {
    pub level: usize,
    pub perturbations: usize,
    pub killed: usize,
    /// Perturbations `(δ_0, .., δ_{k-1})` no witness product caught.
    pub survivors: Vec<Vec<i64>>,
    /// The first perturbation in search order and the violation it produced.
    pub first_witness: Option<(Vec<i64>, Witness)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessReport {
    pub n_max: usize,
    pub coeff_box: i64,
    /// Violations found for the unperturbed `T̂`; expected empty.
    pub baseline: Vec<Witness>,
    pub levels: Vec<LevelOutcome>,
}

impl UniquenessReport {
    pub fn certified(&self) -> bool {
        self.baseline.is_empty() && self.levels.iter().all(|l| l.survivors.is_empty())
    }

    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .map(|l| {
                json!({
                    "level": l.level,
                    "perturbations": l.perturbations,
                    "killed": l.killed,
                    "survivors": l.survivors,
                    "first_witness": l.first_witness.as_ref().map(|(d, w)| {
                        json!({"delta": d, "witness": w.to_json()})
                    }),
                })
            })
            .collect();
        json!({
            "surface": TorusLabel::SURFACE,
            "sequence": "that",
            "n_max": self.n_max,
            "coeff_box": self.coeff_box,
            "verdict": if self.certified() { "certified" } else { "violation" },
            "baseline_violations": self.baseline.iter().map(Witness::to_json).collect::<Vec<_>>(),
            "levels": levels,
        })
    }
}

impl fmt::Display for UniquenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "torus uniqueness of (That), levels 2..={}, |delta_i| <= {}",
            self.n_max, self.coeff_box
        )?;
        if self.baseline.is_empty() {
            writeln!(f, "  unperturbed That: no violation")?;
        } else {
            for w in &self.baseline {
                writeln!(f, "  unperturbed That violates: {w}")?;
            }
        }
        for l in &self.levels {
            writeln!(
                f,
                "  level {}: {}/{} perturbations violate positivity",
                l.level, l.killed, l.perturbations
            )?;
            for s in &l.survivors {
                writeln!(f, "    survivor delta = {s:?}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.certified() {
                "certified: That is the only positive perturbation in the box"
            } else {
                "not certified"
            }
        )
    }
}

/// `T̂_0, .., T̂_{k-1}` followed by `T̂_k + Σ δ_i T̂_i`.
pub fn perturbed_that(k: usize, delta: &[i64]) -> Result<PolySeq> {
    if delta.len() != k {
        return Err(SkeinError::InvalidArgument(format!(
            "level {k} takes {k} perturbation coefficients"
        )));
    }
    let mut table: Vec<Poly1> = (0..=k).map(|i| chebyshev(ChebKind::THat, i)).collect();
    for (i, &d) in delta.iter().enumerate() {
        let term = chebyshev(ChebKind::THat, i).scale(&LaurentPoly::constant(d));
        table[k] = &table[k] + &term;
    }
    let name = format!(
        "that{k}{}",
        delta.iter().map(|d| format!("{d:+}")).collect::<String>()
    );
    PolySeq::from_table(&name, table)
}

fn torus_witness(p: &PolySeq, a: TorusLabel, b: TorusLabel) -> Result<Option<Witness>> {
    let sc = torus::structure_constants(p, &a, &b)?;
    Ok(sc.first_negative().map(|(l, c)| Witness {
        product: Product::Torus { a, b },
        label: l.to_string(),
        coeff: c.clone(),
    }))
}

fn annulus_witness(p: &PolySeq, i: usize, j: usize) -> Result<Option<Witness>> {
    let coeffs = p.product_coeffs(i, j)?;
    Ok(coeffs
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_positive())
        .map(|(k, c)| Witness {
            product: Product::Annulus { i, j },
            label: format!("P{k}"),
            coeff: c.clone(),
        }))
}

/// Tries the witness products for level `k` in a fixed order and returns the
/// first violation.
///
/// `(2,1)(0,1)` and `(k,1)(0,1)` on the torus, then `P_1 P_{k-1}` and
/// `P_2 P_{k-2}` in the annulus, then `(k,0)(0,1)` on the torus. The annulus
/// products see `-δ_i`; `(k,0)(0,1)` sees `q^{±i} δ_i` on the primitive
/// curves `(i,±1)`, so between them every nonzero `δ` is caught.
pub fn find_violation(p: &PolySeq, k: usize) -> Result<Option<Witness>> {
    let b = TorusLabel::slope(0, 1);
    let mut torus_firsts = vec![TorusLabel::slope(2, 1)];
    if k != 2 {
        torus_firsts.push(TorusLabel::slope(k as i64, 1));
    }
    for a in torus_firsts {
        if let Some(w) = torus_witness(p, a, b)? {
            return Ok(Some(w));
        }
    }
    for j in [1, 2] {
        if k > j {
            if let Some(w) = annulus_witness(p, j, k - j)? {
                return Ok(Some(w));
            }
        }
    }
    torus_witness(p, TorusLabel::slope(k as i64, 0), b)
}

/// All nonzero vectors in `[-box, box]^k`, in lexicographic order with
/// `δ_0` most significant.
fn perturbations(k: usize, coeff_box: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-coeff_box..=coeff_box).map(move |d| {
                    let mut v = v.clone();
                    v.push(d);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&d| d != 0));
    out
}

/// Searches every integer perturbation of `T̂` at levels `2..=n_max` with
/// coefficients in `[-coeff_box, coeff_box]`, one level at a time with lower
/// levels equal to `T̂`, for a positivity violation.
pub fn torus_uniqueness(n_max: usize, coeff_box: i64) -> Result<UniquenessReport> {
    if n_max < 2 {
        return Err(SkeinError::InvalidArgument("n_max must be at least 2".into()));
    }
    if coeff_box < 0 {
        return Err(SkeinError::InvalidArgument("box must be nonnegative".into()));
    }
    let that = PolySeq::t_hat();
    let mut baseline = Vec::new();
    let mut levels = Vec::new();
    for k in 2..=n_max {
        baseline.extend(find_violation(&that, k)?);
        let deltas = perturbations(k, coeff_box);
        let found: Vec<Option<Witness>> = deltas
            .par_iter()
            .map(|d| find_violation(&perturbed_that(k, d)?, k))
            .collect::<Result<_>>()?;
        let mut outcome = LevelOutcome {
            level: k,
            perturbations: deltas.len(),
            killed: 0,
            survivors: Vec::new(),
            first_witness: None,
        };
        for (d, w) in deltas.into_iter().zip(found) {
            match w {
                Some(w) => {
                    outcome.killed += 1;
                    if outcome.first_witness.is_none() {
                        outcome.first_witness = Some((d, w));
                    }
                }
                None => outcome.survivors.push(d),
            }
        }
        levels.push(outcome);
    }
    Ok(UniquenessReport {
        n_max,
        coeff_box,
        baseline,
        levels,
    })
}

/// `P_n(a) P_1(b)` on the four-punctured sphere, in the `T̂` flavor, from the
/// `T̂`-expansion of `P_n` and the `T_n(a) b` lemma.
pub fn s04_lower_product(p: &PolySeq, n: usize) -> Result<S04Element> {
    let e = expand_in(&p.get(n)?, &PolySeq::t_hat())?;
    let mut out = S04Element::zero(crate::polyseq::Basis::THat);
    for (i, c) in e.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i == 0 {
            // T̂_0 = 1, while the lemma's T_0 is 2
            out.add_term(S04Label::slope(0, 1), c.clone());
        } else {
            out.add_scaled(&s04::mul_tna_b(i), c)?;
        }
    }
    Ok(out)
}

/// Coefficients of `b_0, .., b_n` in `P_n(a) P_1(b)`.
pub fn lower_bound_coeffs(p: &PolySeq, n: usize) -> Result<Vec<LaurentPoly>> {
    let prod = s04_lower_product(p, n)?;
    Ok((0..=n)
        .map(|i| prod.coeff(&S04Label::slope(i as i64, 1)))
        .collect())
}

fn require_p1_x(p: &PolySeq) -> Result<()> {
    if p.get(1)? != Poly1::x() {
        return Err(SkeinError::InvalidArgument(format!(
            "sequence {} has P_1 = {}, not x",
            p.name(),
            p.get(1)?
        )));
    }
    Ok(())
}

/// Reads the coefficients of `b_i` in `P_n(a) P_1(b)` on the four-punctured
/// sphere for `2 <= n <= n_max`. They are `q^{2i} δ_i` where
/// `P_n = Σ δ_i T̂_i`, so a pass certifies `(T̂) <= (P)` up to `n_max`.
pub fn lower_bound_certify(p: &PolySeq, n_max: usize) -> Result<PositivityReport> {
    require_p1_x(p)?;
    let mut witnesses = Vec::new();
    for n in 2..=n_max {
        for (i, c) in lower_bound_coeffs(p, n)?.into_iter().enumerate() {
            if !c.is_positive() {
                witnesses.push(Witness {
                    product: Product::S04Lower { n },
                    label: S04Label::slope(i as i64, 1).to_string(),
                    coeff: c,
                });
            }
        }
    }
    Ok(PositivityReport::new(
        S04Label::SURFACE,
        p.name(),
        n_max,
        false,
        witnesses,
    ))
}

/// Both halves of `(T̂) <= (P) <= (S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichVerdict {
    pub sequence: String,
    pub n_max: usize,
    pub lower: OrderVerdict,
    pub upper: OrderVerdict,
}

impl SandwichVerdict {
    pub fn holds(&self) -> bool {
        self.lower.holds && self.upper.holds
    }

    pub fn to_json(&self) -> Value {
        let half = |v: &OrderVerdict| {
            json!({
                "holds": v.holds,
                "witness": v.witness.as_ref().map(|w| json!({
                    "n": w.n,
                    "k": w.k,
                    "coeff": w.coeff.to_json(),
                })),
            })
        };
        json!({
            "sequence": self.sequence,
            "n_max": self.n_max,
            "verdict": if self.holds() { "certified" } else { "violation" },
            "that_leq_p": half(&self.lower),
            "p_leq_s": half(&self.upper),
        })
    }
}

impl fmt::Display for SandwichVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = |f: &mut fmt::Formatter<'_>, name: &str, v: &OrderVerdict| match &v.witness {
            None => writeln!(f, "  {name}: holds to n={}", self.n_max),
            Some(w) => writeln!(
                f,
                "  {name}: fails at n={}, coefficient of index {} is {}",
                w.n, w.k, w.coeff
            ),
        };
        writeln!(f, "sandwich check for {} to n={}", self.sequence, self.n_max)?;
        half(f, "(That) <= (P)", &self.lower)?;
        half(f, "(P) <= (S)", &self.upper)?;
        write!(f, "{}", if self.holds() { "certified" } else { "violation" })
    }
}

pub fn sandwich_check(p: &PolySeq, n_max: usize) -> Result<SandwichVerdict> {
    Ok(SandwichVerdict {
        sequence: p.name().to_string(),
        n_max,
        lower: seq_leq(&PolySeq::t_hat(), p, n_max)?,
        upper: seq_leq(p, &PolySeq::s(), n_max)?,
    })
}

fn coeff_named<L: Label>(x: &crate::element::SkeinElement<L>, name: &str, render: impl Fn(&L) -> String) -> LaurentPoly {
    x.terms()
        .find(|(l, _)| render(l) == name)
        .map(|(_, c)| c.clone())
        .unwrap_or_default()
}

/// Recomputes one witness against the sequence it was found for.
pub fn replay_witness(p: &PolySeq, w: &Witness, q1: bool) -> Result<bool> {
    let c = match &w.product {
        Product::Torus { a, b } => {
            let sc = torus::structure_constants(p, a, b)?;
            let sc = if q1 { sc.specialize_q1() } else { sc };
            coeff_named(&sc, &w.label, |l| l.to_string())
        }
        Product::Annulus { i, j } => {
            let k: usize = w
                .label
                .strip_prefix('P')
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| SkeinError::InvalidArgument(format!("bad label {}", w.label)))?;
            p.product_coeffs(*i, *j)?.get(k).cloned().unwrap_or_default()
        }
        Product::S04Lower { n } => {
            coeff_named(&s04_lower_product(p, *n)?, &w.label, |l| l.to_string())
        }
        Product::P1Forcing { delta } => {
            let f = s04::p1_forcing_witness(*delta)?;
            coeff_named(&f.product, &w.label, |l| l.render(f.product.basis()))
        }
    };
    Ok(c == w.coeff)
}

/// True when every witness of the report reproduces exactly.
pub fn replay(report: &PositivityReport, p: &PolySeq) -> Result<bool> {
    for w in &report.witnesses {
        if !replay_witness(p, w, report.q1)? {
            return Ok(false);
        }
    }
    Ok(true)
}
