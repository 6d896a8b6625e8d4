//! Exact Laurent polynomials over the integers in one (`t`) and two (`x`, `y`)
//! variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("bad polynomial term {term:?}")]
pub struct PolyParseError {
    pub term: String,
}

/// Dense Laurent polynomial in `t`: `coeffs[k]` multiplies `t^(lo + k)`.
/// Both end coefficients are nonzero; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct UniPoly {
    lo: i32,
    coeffs: Vec<i64>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::monomial(1, 0)
    }

    pub fn t() -> Self {
        UniPoly::monomial(1, 1)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            return UniPoly::zero();
        }
        UniPoly { lo: exp, coeffs: vec![coeff] }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut map: BTreeMap<i32, i64> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert(0) += c;
        }
        map.retain(|_, c| *c != 0);
        let (Some((&lo, _)), Some((&hi, _))) = (map.first_key_value(), map.last_key_value()) else {
            return UniPoly::zero();
        };
        let mut coeffs = vec![0; (hi - lo) as usize + 1];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        UniPoly { lo, coeffs }
    }

    /// `coeffs[k]` multiplies `t^(lo + k)`.
    pub fn from_dense(lo: i32, coeffs: Vec<i64>) -> Self {
        let mut p = UniPoly { lo, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        let Some(first) = self.coeffs.iter().position(|&c| c != 0) else {
            self.coeffs.clear();
            self.lo = 0;
            return;
        };
        let last = self.coeffs.iter().rposition(|&c| c != 0).unwrap();
        self.coeffs.truncate(last + 1);
        self.coeffs.drain(..first);
        self.lo += first as i32;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    pub fn high_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.coeffs.len() as i32 - 1)
    }

    pub fn span(&self) -> i32 {
        self.coeffs.len().saturating_sub(1) as i32
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.lo;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.lo + k as i32, c))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return UniPoly::zero();
        }
        UniPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn eval(&self, t: i128) -> i128 {
        // Horner from the top, then the low power
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * t + c as i128;
        }
        if self.lo >= 0 {
            acc * t.pow(self.lo as u32)
        } else {
            let d = t.pow((-self.lo) as u32);
            assert!(acc % d == 0, "non-integral evaluation");
            acc / d
        }
    }

    pub fn abs_coeff_sum(&self) -> i64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn coeff_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let dlead = *divisor.coeffs.last().unwrap();
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let qn = rem.len() - dn + 1;
        let mut q = vec![0i64; qn];
        for k in (0..qn).rev() {
            let top = rem[k + dn - 1];
            if top % dlead != 0 {
                return None;
            }
            let f = top / dlead;
            q[k] = f;
            if f != 0 {
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= f * dc;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(UniPoly::from_dense(self.lo - divisor.lo, q))
    }

    /// Serialized as space separated `coeff*t^k` terms, ascending; `0` when zero.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms().map(|(e, c)| format!("{c}*t^{e}")).collect::<Vec<_>>().join(" ")
    }

    pub fn parse_canonical(text: &str) -> Result<Self, PolyParseError> {
        let text = text.trim();
        if text == "0" {
            return Ok(UniPoly::zero());
        }
        let mut terms = Vec::new();
        for term in text.split_whitespace() {
            let bad = || PolyParseError { term: term.to_string() };
            let (c, e) = term.split_once("*t^").ok_or_else(bad)?;
            terms.push((e.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?));
        }
        Ok(UniPoly::from_terms(terms))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("t")?,
                (1, m) => write!(f, "{m}t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, m) => write!(f, "{m}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let mut coeffs = vec![0; (hi - lo) as usize + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + k] += c;
        }
        for (k, &c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.lo - lo) as usize + k] += c;
        }
        UniPoly::from_dense(lo, coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_dense(self.lo + rhs.lo, coeffs)
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(UniPoly, Add add, Sub sub, Mul mul);

/// Sparse Laurent polynomial in `x` and `y`, terms sorted by `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BiPoly {
    terms: Vec<((i32, i32), i64)>,
}

impl PartialOrd for BiPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BiPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn monomial(coeff: i64, i: i32, j: i32) -> Self {
        if coeff == 0 {
            return BiPoly::zero();
        }
        BiPoly { terms: vec![((i, j), coeff)] }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), i64)>) -> Self {
        let mut map: BTreeMap<(i32, i32), i64> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert(0) += c;
        }
        BiPoly { terms: map.into_iter().filter(|(_, c)| *c != 0).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[((i32, i32), i64)] {
        &self.terms
    }

    pub fn coeff(&self, i: i32, j: i32) -> i64 {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(&(i, j)))
            .map_or(0, |k| self.terms[k].1)
    }

    /// Multiplies by `coeff * x^i * y^j`.
    pub fn mul_monomial(&self, coeff: i64, i: i32, j: i32) -> Self {
        if coeff == 0 {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|&((a, b), c)| ((a + i, b + j), c * coeff)).collect(),
        }
    }

    /// `self += coeff * x^i * y^j * other`, merging in place.
    pub fn add_scaled(&mut self, other: &BiPoly, coeff: i64, i: i32, j: i32) {
        if other.is_zero() || coeff == 0 {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|&((p, q), c)| ((p + i, q + j), c * coeff)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ea, ca)), Some(&(eb, cb))) => match ea.cmp(&eb) {
                    Ordering::Less => {
                        out.push((ea, ca));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((eb, cb));
                        b.next();
                    }
                    Ordering::Equal => {
                        if ca + cb != 0 {
                            out.push((ea, ca + cb));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&t), None) => {
                    out.push(t);
                    a.next();
                }
                (None, Some(&t)) => {
                    out.push(t);
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        BiPoly::from_terms(self.terms.iter().map(|&((i, j), c)| ((j, i), c)))
    }

    /// Value at `x = ±1`, `y = ±1`.
    pub fn eval_units(&self, x: i64, y: i64) -> i64 {
        assert!(x.abs() == 1 && y.abs() == 1);
        self.terms
            .iter()
            .map(|&((i, j), c)| c * x.pow(i.unsigned_abs()) * y.pow(j.unsigned_abs()))
            .sum()
    }

    /// Serialized as space separated `coeff*x^i*y^j` terms, ascending; `0` when zero.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|((i, j), c)| format!("{c}*x^{i}*y^{j}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_canonical(text: &str) -> Result<Self, PolyParseError> {
        let text = text.trim();
        if text == "0" {
            return Ok(BiPoly::zero());
        }
        let mut terms = Vec::new();
        for term in text.split_whitespace() {
            let bad = || PolyParseError { term: term.to_string() };
            let (c, rest) = term.split_once("*x^").ok_or_else(bad)?;
            let (i, j) = rest.split_once("*y^").ok_or_else(bad)?;
            terms.push((
                (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?),
                c.parse().map_err(|_| bad())?,
            ));
        }
        Ok(BiPoly::from_terms(terms))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, &((i, j), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let mag = c.unsigned_abs();
            let mut vars = String::new();
            for (v, e) in [('x', i), ('y', j)] {
                match e {
                    0 => {}
                    1 => vars.push(v),
                    e => vars.push_str(&format!("{v}^{e}")),
                }
            }
            match (mag, vars.is_empty()) {
                (m, true) => write!(f, "{m}")?,
                (1, false) => f.write_str(&vars)?,
                (m, false) => write!(f, "{m}{vars}")?,
            }
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, 1, 0, 0);
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        self.mul_monomial(-1, 0, 0)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, -1, 0, 0);
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let (small, big) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = BiPoly::zero();
        for &((i, j), c) in &small.terms {
            out.add_scaled(big, c, i, j);
        }
        out
    }
}

forward_owned!(BiPoly, Add add, Sub sub, Mul mul);
