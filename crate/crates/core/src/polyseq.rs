//! One-variable polynomials over ℤ[q^±1], normalized polynomial sequences and
//! the partial order on them.
//!
//! A sequence `(P_n)` is normalized when every `P_n` is monic of degree `n`.
//! For normalized sequences `P <= Q` means every `Q_n` is a combination of
//! `P_0, ..., P_n` with coefficients in ℤ₊[q^±1]. All verdicts here are for
//! finite prefixes only.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

static NEXT_ID: AtomicU64 = AtomicU64::new(0);

use num_bigint::BigInt;

use crate::error::{Result, SkeinError};
use crate::laurent::{parse_laurent, LaurentPoly};

/// A polynomial in `x` with Laurent coefficients; `coeffs[k]` multiplies `x^k`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly1 {
    coeffs: Vec<LaurentPoly>,
}

impl Poly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        coeffs[n] = LaurentPoly::one();
        Self { coeffs }
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| LaurentPoly::constant(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(LaurentPoly::is_one)
    }

    /// True when every coefficient is an integer (no genuine `q`).
    pub fn is_q_free(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_constant().is_some())
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Composition `self(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &Poly1) -> Poly1 {
        let mut acc = Poly1::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly1::constant(c.clone());
        }
        acc
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let part = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if c.len() == 1 && c.as_constant().is_some() {
                format!("{c}{mono}")
            } else if c.len() == 1 && c.terms().next().is_some_and(|(_, v)| *v == BigInt::from(1)) {
                format!("{c}*{mono}")
            } else {
                format!("({c})*{mono}")
            };
            parts.push(part);
        }
        let mut out = String::new();
        for (i, p) in parts.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&p);
            } else if let Some(rest) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&p);
            }
        }
        out
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl<'a> Add<&'a Poly1> for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &'a Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a Poly1> for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &'a Poly1) -> Poly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly1> for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &'a Poly1) -> Poly1 {
        poly_mul(self, rhs)
    }
}

/// Exact product of one-variable polynomials.
pub fn poly_mul(a: &Poly1, b: &Poly1) -> Poly1 {
    if a.is_zero() || b.is_zero() {
        return Poly1::zero();
    }
    let mut out = vec![LaurentPoly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ca) in a.coeffs.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    Poly1::from_coeffs(out)
}

/// Evaluates an integer polynomial at `x = t + t^-1`, returning a Laurent
/// polynomial in `t`.
pub fn substitute_t(p: &Poly1) -> Result<LaurentPoly> {
    if !p.is_q_free() {
        return Err(SkeinError::InvalidArgument(format!(
            "substitute_t needs integer coefficients, got {p}"
        )));
    }
    let t_plus = LaurentPoly::from_terms([(1, 1), (-1, 1)]);
    let mut acc = LaurentPoly::zero();
    for c in p.coeffs.iter().rev() {
        acc = &acc * &t_plus;
        acc += c;
    }
    Ok(acc)
}

/// The Chebyshev families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    /// `T_0 = 2`, `T_1 = x`, `T_n = x T_{n-1} - T_{n-2}`.
    T,
    /// As `T` but with `T̂_0 = 1`.
    THat,
    /// `S_0 = 1`, `S_1 = x`, `S_n = x S_{n-1} - S_{n-2}`.
    S,
}

/// The `n`-th Chebyshev polynomial of the given kind.
pub fn chebyshev(kind: ChebKind, n: usize) -> Poly1 {
    let seq = match kind {
        ChebKind::T => PolySeq::chebyshev_t(),
        ChebKind::THat => PolySeq::t_hat(),
        ChebKind::S => PolySeq::s(),
    };
    seq.get(n).expect("builtin sequences are infinite")
}

/// Tag identifying the basis flavor of a skein element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Monomial,
    THat,
    S,
    Custom(String),
}

impl Basis {
    /// Identifier used on the command line and in JSON.
    pub fn id(&self) -> String {
        match self {
            Basis::Monomial => "monomial".into(),
            Basis::THat => "that".into(),
            Basis::S => "s".into(),
            Basis::Custom(name) => format!("user:{name}"),
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        match id {
            "monomial" => Ok(Basis::Monomial),
            "that" => Ok(Basis::THat),
            "s" => Ok(Basis::S),
            _ => match id.strip_prefix("user:") {
                Some(name) if !name.is_empty() => Ok(Basis::Custom(name.to_string())),
                _ => Err(SkeinError::InvalidArgument(format!("unknown basis {id:?}"))),
            },
        }
    }

    /// The sequence for builtin flavors.
    pub fn builtin_seq(&self) -> Option<PolySeq> {
        match self {
            Basis::Monomial => Some(PolySeq::monomial()),
            Basis::THat => Some(PolySeq::t_hat()),
            Basis::S => Some(PolySeq::s()),
            Basis::Custom(_) => None,
        }
    }

    /// Suffix used when printing torus labels, e.g. `(2,1)_T`.
    pub fn suffix(&self) -> &'static str {
        match self {
            Basis::Monomial => "",
            Basis::THat => "_T",
            Basis::S => "_S",
            Basis::Custom(_) => "_P",
        }
    }

    /// Prefix used when printing punctured-surface labels, e.g. `S(2,1)`.
    pub fn prefix(&self) -> &'static str {
        match self {
            Basis::Monomial => "",
            Basis::THat => "T",
            Basis::S => "S",
            Basis::Custom(_) => "P",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Generator {
    Monomial,
    Cheb(ChebKind),
    Table,
}

struct SeqInner {
    name: String,
    generator: Generator,
    cache: RwLock<Vec<Poly1>>,
    /// Distinguishes sequences that share a name.
    id: u64,
    /// `expand_in(P_d, target)` keyed by target id and `d`.
    expansions: Mutex<HashMap<(u64, usize), Coeffs>>,
    /// `expand_in(P_i P_j, self)` keyed by `(i, j)`, `i <= j`.
    products: Mutex<HashMap<(usize, usize), Coeffs>>,
}

type Coeffs = Arc<Vec<LaurentPoly>>;

/// A polynomial sequence `(P_n)`, lazily generated and memoized. Cloning is
/// cheap and clones share the memo tables.
#[derive(Clone)]
pub struct PolySeq {
    inner: Arc<SeqInner>,
}

impl fmt::Debug for PolySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolySeq({})", self.inner.name)
    }
}

impl PartialEq for PolySeq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.generator == other.inner.generator
                && self.inner.name == other.inner.name
                && (self.inner.generator != Generator::Table
                    || *self.inner.cache.read().unwrap() == *other.inner.cache.read().unwrap()))
    }
}

impl PolySeq {
    fn with_generator(name: &str, generator: Generator, table: Vec<Poly1>) -> Self {
        Self {
            inner: Arc::new(SeqInner {
                name: name.to_string(),
                generator,
                id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
                cache: RwLock::new(table),
                expansions: Mutex::new(HashMap::new()),
                products: Mutex::new(HashMap::new()),
            }),
        }
    }

    /// `P_n = x^n`.
    pub fn monomial() -> Self {
        static SEQ: OnceLock<PolySeq> = OnceLock::new();
        SEQ.get_or_init(|| Self::with_generator("monomial", Generator::Monomial, Vec::new()))
            .clone()
    }

    /// Normalized Chebyshev polynomials of the first kind.
    pub fn t_hat() -> Self {
        static SEQ: OnceLock<PolySeq> = OnceLock::new();
        SEQ.get_or_init(|| Self::with_generator("that", Generator::Cheb(ChebKind::THat), Vec::new()))
            .clone()
    }

    /// Chebyshev polynomials of the second kind.
    pub fn s() -> Self {
        static SEQ: OnceLock<PolySeq> = OnceLock::new();
        SEQ.get_or_init(|| Self::with_generator("s", Generator::Cheb(ChebKind::S), Vec::new()))
            .clone()
    }

    /// Unnormalized Chebyshev polynomials of the first kind (`T_0 = 2`).
    pub fn chebyshev_t() -> Self {
        Self::with_generator("t", Generator::Cheb(ChebKind::T), Vec::new())
    }

    /// A finite sequence from an explicit table; rejects tables that are not
    /// normalized.
    pub fn from_table(name: &str, table: Vec<Poly1>) -> Result<Self> {
        if table.is_empty() {
            return Err(SkeinError::NotNormalized(name.into(), "empty table".into()));
        }
        for (n, p) in table.iter().enumerate() {
            if p.degree() != Some(n) {
                return Err(SkeinError::NotNormalized(
                    name.into(),
                    format!("P_{n} = {p} does not have degree {n}"),
                ));
            }
            if !p.is_monic() {
                return Err(SkeinError::NotNormalized(
                    name.into(),
                    format!("P_{n} = {p} is not monic"),
                ));
            }
        }
        Ok(Self::with_generator(name, Generator::Table, table))
    }

    /// Resolves a builtin name: `monomial`, `that`, `s`, `t`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "monomial" => Ok(Self::monomial()),
            "that" => Ok(Self::t_hat()),
            "s" => Ok(Self::s()),
            "t" => Ok(Self::chebyshev_t()),
            _ => Err(SkeinError::InvalidArgument(format!("unknown sequence {name:?}"))),
        }
    }

    /// Parses the text sequence format: one polynomial per line,
    /// `n: c0 c1 ... cn`, coefficients integers or Laurent literals such as
    /// `3q^-2+1`. Blank lines and `#` comments are ignored. Degrees must
    /// appear in order starting at 0.
    pub fn parse_table(name: &str, text: &str) -> Result<Self> {
        let mut table = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let (head, rest) = line.split_once(':').ok_or_else(|| SkeinError::SequenceFile {
                line: line_no,
                msg: "expected `n: c0 c1 ... cn`".into(),
            })?;
            let n: usize = head.trim().parse().map_err(|_| SkeinError::SequenceFile {
                line: line_no,
                msg: format!("bad degree {:?} at column 1", head.trim()),
            })?;
            if n != table.len() {
                return Err(SkeinError::SequenceFile {
                    line: line_no,
                    msg: format!("expected degree {}, found {n}", table.len()),
                });
            }
            let base_col = head.chars().count() + 2;
            let mut coeffs = Vec::new();
            let mut col = base_col;
            for tok in rest.split(' ') {
                if tok.is_empty() {
                    col += 1;
                    continue;
                }
                let c = parse_laurent(tok, 'q').map_err(|e| {
                    let pos = match e {
                        SkeinError::Parse { pos, .. } => pos,
                        _ => 0,
                    };
                    SkeinError::SequenceFile {
                        line: line_no,
                        msg: format!("bad coefficient {tok:?} at column {}", col + pos),
                    }
                })?;
                coeffs.push(c);
                col += tok.chars().count() + 1;
            }
            if coeffs.len() != n + 1 {
                return Err(SkeinError::SequenceFile {
                    line: line_no,
                    msg: format!("degree {n} needs {} coefficients, found {}", n + 1, coeffs.len()),
                });
            }
            table.push(Poly1::from_coeffs(coeffs));
        }
        Self::from_table(name, table)
    }

    /// Loads a sequence file; the sequence is named after the file stem.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            SkeinError::InvalidArgument(format!("cannot read {}: {e}", path.display()))
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "user".into());
        Self::parse_table(&name, &text)
    }

    /// Resolves `monomial|that|s|t|file:PATH`.
    pub fn resolve(spec: &str) -> Result<Self> {
        match spec.strip_prefix("file:") {
            Some(path) => Self::load(Path::new(path)),
            None => Self::builtin(spec),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// Human-readable name used in reports, e.g. `That`.
    pub fn display_name(&self) -> String {
        match self.inner.generator {
            Generator::Monomial => "Monomial".into(),
            Generator::Cheb(ChebKind::THat) => "That".into(),
            Generator::Cheb(ChebKind::S) => "S".into(),
            Generator::Cheb(ChebKind::T) => "T".into(),
            Generator::Table => self.inner.name.clone(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.inner.generator != Generator::Cheb(ChebKind::T)
    }

    /// Largest available degree, `None` when unbounded.
    pub fn max_degree(&self) -> Option<usize> {
        match self.inner.generator {
            Generator::Table => Some(self.inner.cache.read().unwrap().len() - 1),
            _ => None,
        }
    }

    /// The basis flavor tag of a normalized sequence.
    pub fn basis(&self) -> Result<Basis> {
        match self.inner.generator {
            Generator::Monomial => Ok(Basis::Monomial),
            Generator::Cheb(ChebKind::THat) => Ok(Basis::THat),
            Generator::Cheb(ChebKind::S) => Ok(Basis::S),
            Generator::Cheb(ChebKind::T) => Err(SkeinError::NotNormalized(
                "t".into(),
                "T_0 = 2 is not monic".into(),
            )),
            Generator::Table => Ok(Basis::Custom(self.inner.name.clone())),
        }
    }

    /// `P_n`.
    pub fn get(&self, n: usize) -> Result<Poly1> {
        if let Some(p) = self.inner.cache.read().unwrap().get(n) {
            return Ok(p.clone());
        }
        let generator = self.inner.generator;
        if generator == Generator::Table {
            return Err(SkeinError::OutOfRange {
                name: self.inner.name.clone(),
                degree: n,
            });
        }
        let mut cache = self.inner.cache.write().unwrap();
        while cache.len() <= n {
            let k = cache.len();
            let next = match generator {
                Generator::Monomial => Poly1::x_pow(k),
                Generator::Cheb(kind) => match k {
                    0 if kind == ChebKind::T => Poly1::from_ints(&[2]),
                    0 => Poly1::one(),
                    1 => Poly1::x(),
                    // T̂_2 = x T̂_1 - 2, since the recurrence runs through T_0 = 2.
                    2 if kind != ChebKind::S => Poly1::from_ints(&[-2, 0, 1]),
                    _ => &(&Poly1::x() * &cache[k - 1]) - &cache[k - 2],
                },
                Generator::Table => unreachable!(),
            };
            cache.push(next);
        }
        Ok(cache[n].clone())
    }

    /// `expand_in(P_d, target)`, memoized per target basis.
    pub fn expansion_in(&self, d: usize, target: &PolySeq) -> Result<Arc<Vec<LaurentPoly>>> {
        target.basis()?;
        let key = (target.inner.id, d);
        if let Some(v) = self.inner.expansions.lock().unwrap().get(&key) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(expand_in(&self.get(d)?, target)?);
        self.inner
            .expansions
            .lock()
            .unwrap()
            .insert(key, Arc::clone(&v));
        Ok(v)
    }

    /// Linearization coefficients: `P_i P_j = Σ_k c_k P_k`.
    pub fn product_coeffs(&self, i: usize, j: usize) -> Result<Arc<Vec<LaurentPoly>>> {
        let key = (i.min(j), i.max(j));
        if let Some(v) = self.inner.products.lock().unwrap().get(&key) {
            return Ok(Arc::clone(v));
        }
        let prod = poly_mul(&self.get(i)?, &self.get(j)?);
        let v = Arc::new(expand_in(&prod, self)?);
        self.inner.products.lock().unwrap().insert(key, Arc::clone(&v));
        Ok(v)
    }
}

/// Coefficients `(c_0, ..., c_d)` with `p = Σ c_k basis_k`, by descending
/// elimination. The zero polynomial gives an empty vector.
pub fn expand_in(p: &Poly1, basis: &PolySeq) -> Result<Vec<LaurentPoly>> {
    if !basis.is_normalized() {
        return Err(SkeinError::NotNormalized(
            basis.name().into(),
            "cannot expand in a non-monic sequence".into(),
        ));
    }
    let Some(deg) = p.degree() else {
        return Ok(Vec::new());
    };
    let mut rem = p.clone();
    let mut out = vec![LaurentPoly::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let c = rem.coeff(k);
        if c.is_zero() {
            continue;
        }
        rem = &rem - &basis.get(k)?.scale(&c);
        out[k] = c;
    }
    debug_assert!(rem.is_zero());
    Ok(out)
}

/// A coefficient of `expand_in(Q_n, P)` outside ℤ₊[q^±1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderWitness {
    pub n: usize,
    pub k: usize,
    pub coeff: LaurentPoly,
}

/// Outcome of comparing two sequences on the prefix `0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderVerdict {
    pub holds: bool,
    pub n_max: usize,
    pub witness: Option<OrderWitness>,
}

/// Decides `P <= Q` up to degree `n_max`: every `Q_n` must be a ℤ₊[q^±1]
/// combination of `P_0..P_n`. The first failing `(n, k)` in ascending order is
/// the witness.
pub fn seq_leq(p: &PolySeq, q: &PolySeq, n_max: usize) -> Result<OrderVerdict> {
    for n in 0..=n_max {
        let coeffs = expand_in(&q.get(n)?, p)?;
        if let Some((k, c)) = coeffs.iter().enumerate().find(|(_, c)| !c.is_positive()) {
            return Ok(OrderVerdict {
                holds: false,
                n_max,
                witness: Some(OrderWitness {
                    n,
                    k,
                    coeff: c.clone(),
                }),
            });
        }
    }
    Ok(OrderVerdict {
        holds: true,
        n_max,
        witness: None,
    })
}

/// Rebuilds `Σ c_k basis_k`.
pub fn reconstruct(coeffs: &[LaurentPoly], basis: &PolySeq) -> Result<Poly1> {
    let mut acc = Poly1::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &basis.get(k)?.scale(c);
        }
    }
    Ok(acc)
}

/// Integer helper for tests and reports.
pub fn int_coeffs(coeffs: &[LaurentPoly]) -> Option<Vec<BigInt>> {
    coeffs.iter().map(LaurentPoly::as_constant).collect()
}
