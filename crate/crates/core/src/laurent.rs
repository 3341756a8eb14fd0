//! Exact Laurent polynomials in one variable `q` with big-integer coefficients.
//!
//! The same type doubles as a Laurent polynomial in a formal variable `t`
//! (see [`crate::polyseq::substitute_t`]); only the printed variable name
//! differs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Result, SkeinError};

/// An element of ℤ[q, q⁻¹] in canonical form: one entry per exponent, no
/// zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `coeff · q^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The quantum integer `[i] = q^(2i-2) + q^(2i-6) + ... + q^(2-2i)`.
    pub fn quantum_int(i: i64) -> Result<Self> {
        if i < 1 {
            return Err(SkeinError::InvalidArgument(format!(
                "quantum integer [{i}] requires i >= 1"
            )));
        }
        Ok(Self::from_terms((0..i).map(|k| (2 * i - 2 - 4 * k, 1))))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// True iff every coefficient is nonnegative, i.e. the value lies in
    /// ℤ₊[q^±1]. Zero is positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Smallest and largest exponent, or `None` for the zero polynomial.
    pub fn q_degree_range(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// Value at `q = 1`.
    pub fn specialize_q1(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Coefficients as JSON: exponent strings to integers, in ascending
    /// exponent order. Magnitudes beyond 2^53 are written as strings.
    pub fn to_json(&self) -> Value {
        let limit = BigInt::from(1u64 << 53);
        let mut map = Map::new();
        for (e, c) in &self.terms {
            let v = match c.to_i64() {
                Some(small) if c.abs() <= limit => Value::from(small),
                _ => Value::String(c.to_string()),
            };
            map.insert(e.to_string(), v);
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| SkeinError::Json("coefficient must be an object".into()))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let e: i64 = k
                .parse()
                .map_err(|_| SkeinError::Json(format!("bad exponent key {k:?}")))?;
            let c: BigInt = match v {
                Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| SkeinError::Json(format!("non-integer coefficient {n}")))?,
                Value::String(s) => s
                    .parse()
                    .map_err(|_| SkeinError::Json(format!("bad coefficient {s:?}")))?,
                other => return Err(SkeinError::Json(format!("bad coefficient {other}"))),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Formats with an arbitrary variable name.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !unit {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl FromStr for LaurentPoly {
    type Err = SkeinError;

    /// Parses literals such as `3q^-2+1`, `-q^2 - q^-2`, `q`, `2*q^3`, `0`.
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s, 'q')
    }
}

/// Parses a Laurent literal in the variable `var`.
pub fn parse_laurent(input: &str, var: char) -> Result<LaurentPoly> {
    let chars: Vec<char> = input.chars().collect();
    let err = |pos: usize, msg: &str| SkeinError::Parse {
        input: input.to_string(),
        pos,
        msg: msg.to_string(),
    };
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return None;
        }
        chars[start..*pos].iter().collect::<String>().parse().ok()
    };

    let mut out = LaurentPoly::zero();
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(err(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(err(pos, "expected '+' or '-'"));
        }
        first = false;
        let term_start = pos;
        let coeff = read_int(&mut pos);
        skip_ws(&mut pos);
        if coeff.is_some() && pos < chars.len() && chars[pos] == '*' {
            pos += 1;
            skip_ws(&mut pos);
            if pos >= chars.len() || chars[pos] != var {
                return Err(err(pos, &format!("expected '{var}' after '*'")));
            }
        }
        let mut exp = 0i64;
        if pos < chars.len() && chars[pos] == var {
            pos += 1;
            exp = 1;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                let exp_neg = if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
                    pos += 1;
                    chars[pos - 1] == '-'
                } else {
                    false
                };
                let e = read_int(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
                let e = e.to_i64().ok_or_else(|| err(pos, "exponent out of range"))?;
                exp = if exp_neg { -e } else { e };
            }
        } else if coeff.is_none() {
            return Err(err(term_start, &format!("expected integer or '{var}'")));
        }
        let mut c = coeff.unwrap_or_else(BigInt::one);
        if negative {
            c = -c;
        }
        out.add_term(exp, c);
        skip_ws(&mut pos);
    }
    Ok(out)
}
