//! Slopes of simple closed curves on the torus, the once-punctured torus and
//! the four-punctured sphere, and the linear action of mapping classes.
//!
//! On Σ₀,₄ only the half twist σ = [[1,1],[0,1]] and its inverse are exposed
//! as mapping classes acting on peripheral labels (σ swaps punctures 1 and 2
//! and fixes 3 and 4). The tori get the full SL₂(ℤ) action.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Result, SkeinError};

/// A nonzero slope `(r, s)` up to sign, stored in canonical form: `s > 0`, or
/// `s == 0` and `r > 0`. Non-primitive slopes stand for parallel copies of
/// the primitive one.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveClass {
    r: i64,
    s: i64,
}

impl CurveClass {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r == 0 && s == 0 {
            return Err(SkeinError::InvalidArgument(
                "(0,0) is not a curve class".into(),
            ));
        }
        Ok(if s < 0 || (s == 0 && r < 0) {
            Self { r: -r, s: -s }
        } else {
            Self { r, s }
        })
    }

    /// Canonical class of `(r, s)`, or `None` for `(0, 0)`.
    pub fn try_new(r: i64, s: i64) -> Option<Self> {
        Self::new(r, s).ok()
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// gcd(|r|, |s|), the number of parallel copies.
    pub fn multiplicity(&self) -> u32 {
        self.r.gcd(&self.s) as u32
    }

    pub fn is_primitive(&self) -> bool {
        self.multiplicity() == 1
    }

    /// `(d, primitive)` with `self = d · primitive`.
    pub fn gcd_decompose(&self) -> (u32, CurveClass) {
        let d = self.multiplicity();
        let di = d as i64;
        (d, Self::new(self.r / di, self.s / di).expect("nonzero"))
    }

    pub fn primitive(&self) -> CurveClass {
        self.gcd_decompose().1
    }

    /// `k` parallel copies; `None` when `k == 0`.
    pub fn scaled(&self, k: u32) -> Option<CurveClass> {
        Self::try_new(self.r * k as i64, self.s * k as i64)
    }

    /// `det[self; other] = r_a s_b - s_a r_b` on the canonical representatives.
    pub fn det(&self, other: &CurveClass) -> i64 {
        self.r * other.s - self.s * other.r
    }

    /// Geometric intersection number of two primitive torus slopes.
    pub fn intersection_number(&self, other: &CurveClass) -> Result<u64> {
        if !self.is_primitive() || !other.is_primitive() {
            return Err(SkeinError::InvalidArgument(format!(
                "intersection number needs primitive slopes, got {self} and {other}"
            )));
        }
        Ok(self.det(other).unsigned_abs())
    }
}

/// Labels sort by `s` first, then `r`.
impl Ord for CurveClass {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.s, self.r).cmp(&(other.s, other.r))
    }
}

impl PartialOrd for CurveClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CurveClass {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        let (r, sv) = parse_pair(s)?;
        CurveClass::new(r, sv).map_err(|_| SkeinError::Parse {
            input: s.into(),
            pos: 0,
            msg: "(0,0) is not a curve class".into(),
        })
    }
}

/// Parses `(r,s)` with optional whitespace, reporting the offending position.
pub fn parse_pair(input: &str) -> Result<(i64, i64)> {
    let chars: Vec<char> = input.chars().collect();
    let err = |pos: usize, msg: &str| SkeinError::Parse {
        input: input.into(),
        pos,
        msg: msg.into(),
    };
    let mut pos = 0;
    let ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let expect = |pos: &mut usize, c: char| -> Result<()> {
        ws(pos);
        if *pos < chars.len() && chars[*pos] == c {
            *pos += 1;
            Ok(())
        } else {
            Err(err(*pos, &format!("expected '{c}'")))
        }
    };
    let int = |pos: &mut usize| -> Result<i64> {
        ws(pos);
        let start = *pos;
        if *pos < chars.len() && (chars[*pos] == '-' || chars[*pos] == '+') {
            *pos += 1;
        }
        let digits = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if digits == *pos {
            return Err(err(digits, "expected integer"));
        }
        chars[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| err(start, "integer out of range"))
    };
    expect(&mut pos, '(')?;
    let r = int(&mut pos)?;
    expect(&mut pos, ',')?;
    let s = int(&mut pos)?;
    expect(&mut pos, ')')?;
    ws(&mut pos);
    if pos != chars.len() {
        return Err(err(pos, "unexpected trailing input"));
    }
    Ok((r, s))
}

/// An element of SL₂(ℤ) acting linearly on slopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MappingClass {
    m: [[i64; 2]; 2],
}

impl MappingClass {
    pub fn new(m: [[i64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det != 1 {
            return Err(SkeinError::InvalidArgument(format!(
                "mapping class must have determinant 1, got {det}"
            )));
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self { m: [[1, 0], [0, 1]] }
    }

    /// The half twist along `a = (1,0)`.
    pub fn sigma() -> Self {
        Self { m: [[1, 1], [0, 1]] }
    }

    pub fn sigma_inv() -> Self {
        Self { m: [[1, -1], [0, 1]] }
    }

    /// Rotation by a quarter turn, `(1,0) -> (0,1)`.
    pub fn rotation() -> Self {
        Self { m: [[0, -1], [1, 0]] }
    }

    /// `σ^k` for any integer `k`.
    pub fn sigma_pow(k: i64) -> Self {
        Self { m: [[1, k], [0, 1]] }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn compose(&self, other: &MappingClass) -> MappingClass {
        let a = self.m;
        let b = other.m;
        Self {
            m: [
                [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
                [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
            ],
        }
    }

    pub fn inverse(&self) -> MappingClass {
        let a = self.m;
        Self {
            m: [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]],
        }
    }

    /// Raw action on an integer vector.
    pub fn apply_vec(&self, r: i64, s: i64) -> (i64, i64) {
        (self.m[0][0] * r + self.m[0][1] * s, self.m[1][0] * r + self.m[1][1] * s)
    }

    /// Canonical image of a slope.
    pub fn apply(&self, c: &CurveClass) -> CurveClass {
        let (r, s) = self.apply_vec(c.r, c.s);
        CurveClass::new(r, s).expect("SL2 maps nonzero vectors to nonzero vectors")
    }
}

pub fn mcg_apply(m: &MappingClass, c: &CurveClass) -> CurveClass {
    m.apply(c)
}

pub fn gcd_decompose(c: &CurveClass) -> (u32, CurveClass) {
    c.gcd_decompose()
}

pub fn intersection_number(a: &CurveClass, b: &CurveClass) -> Result<u64> {
    a.intersection_number(b)
}
