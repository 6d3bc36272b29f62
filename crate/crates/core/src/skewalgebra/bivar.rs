use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactfield::{FieldElement, NumberField};

/// How the two commuting generators of `A(0)` are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spelling {
    /// `x` and `y`, the coordinates of `R = K[x, y]`.
    #[default]
    Xy,
    /// `ud` and `du`, the same elements read inside the algebra.
    UdDu,
}

impl Spelling {
    fn names(self) -> (&'static str, &'static str) {
        match self {
            Spelling::Xy => ("x", "y"),
            Spelling::UdDu => ("ud", "du"),
        }
    }
}

/// Sparse polynomial `sum c_ij x^i y^j` in `K[x, y]`.
///
/// Keys are ordered lexicographically with `x > y`; the last key is the
/// leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct BivarPoly {
    field: NumberField,
    terms: BTreeMap<(u32, u32), FieldElement>,
}

impl BivarPoly {
    pub fn zero(field: &NumberField) -> Self {
        BivarPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: &FieldElement, i: u32, j: u32) -> Self {
        let mut p = Self::zero(c.field());
        if !c.is_zero() {
            p.terms.insert((i, j), c.clone());
        }
        p
    }

    pub fn x(field: &NumberField) -> Self {
        Self::monomial(&field.one(), 1, 0)
    }

    pub fn y(field: &NumberField) -> Self {
        Self::monomial(&field.one(), 0, 1)
    }

    /// `c0 + cx x + cy y`.
    pub fn affine(c0: &FieldElement, cx: &FieldElement, cy: &FieldElement) -> Self {
        let mut p = Self::zero(c0.field());
        for (k, c) in [((0, 0), c0), ((1, 0), cx), ((0, 1), cy)] {
            if !c.is_zero() {
                p.terms.insert(k, c.clone());
            }
        }
        p
    }

    /// Builds from `(i, j, c)` triples, summing repeats.
    pub fn from_terms(field: &NumberField, terms: impl IntoIterator<Item = (u32, u32, FieldElement)>) -> Self {
        let mut p = Self::zero(field);
        for (i, j, c) in terms {
            p.add_term((i, j), &c);
        }
        p
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &FieldElement)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> FieldElement {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == (0, 0))
    }

    pub fn constant_term(&self) -> FieldElement {
        self.coeff(0, 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// `(c0, cx, cy)` when the polynomial has total degree at most one.
    pub fn affine_coeffs(&self) -> Option<(FieldElement, FieldElement, FieldElement)> {
        if self.total_degree().unwrap_or(0) > 1 {
            return None;
        }
        Some((self.coeff(0, 0), self.coeff(1, 0), self.coeff(0, 1)))
    }

    fn add_term(&mut self, k: (u32, u32), c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, &-c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BivarPoly { field: self.field.clone(), terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field);
        }
        BivarPoly { field: self.field.clone(), terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &other.terms {
                out.add_term((i + k, j + l), &(a * b));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.terms.iter().fold(self.field.zero(), |acc, ((i, j), c)| {
            &acc + &(&(c * &x.pow(*i as u64)) * &y.pow(*j as u64))
        })
    }

    /// Substitutes `x -> px`, `y -> py`.
    pub fn compose(&self, px: &Self, py: &Self) -> Self {
        let mut xpows: Vec<Self> = Vec::new();
        let mut ypows: Vec<Self> = Vec::new();
        let mut out = Self::zero(&self.field);
        for ((i, j), c) in &self.terms {
            while xpows.len() <= *i as usize {
                let next = xpows.last().map_or_else(|| Self::one(&self.field), |p| p.mul(px));
                xpows.push(next);
            }
            while ypows.len() <= *j as usize {
                let next = ypows.last().map_or_else(|| Self::one(&self.field), |p| p.mul(py));
                ypows.push(next);
            }
            for (k, v) in xpows[*i as usize].mul(&ypows[*j as usize]).terms {
                out.add_term(k, &(&v * c));
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (&(a, b), lc) = divisor.terms.last_key_value()?;
        let lc_inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field);
        while let Some((&(i, j), c)) = rem.terms.last_key_value() {
            if i < a || j < b {
                return None;
            }
            let q = c * &lc_inv;
            let step = Self::monomial(&q, i - a, j - b);
            rem = rem.sub(&step.mul(divisor));
            quot.add_term((i - a, j - b), &q);
        }
        Some(quot)
    }

    pub fn display(&self, spelling: Spelling) -> impl fmt::Display + '_ {
        DisplayBivar { p: self, spelling }
    }
}

struct DisplayBivar<'a> {
    p: &'a BivarPoly,
    spelling: Spelling,
}

fn power(name: &str, k: u32, spelling: Spelling) -> String {
    use alloc::format;
    match (k, spelling) {
        (1, _) => String::from(name),
        (_, Spelling::Xy) => format!("{name}^{k}"),
        (_, Spelling::UdDu) => format!("({name})^{k}"),
    }
}

impl fmt::Display for DisplayBivar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let (xn, yn) = self.spelling.names();
        let mut first = true;
        for ((i, j), c) in self.p.terms.iter().rev() {
            let mut vars = Vec::new();
            if *i > 0 {
                vars.push(power(xn, *i, self.spelling));
            }
            if *j > 0 {
                vars.push(power(yn, *j, self.spelling));
            }
            let mono = vars.join("*");
            match c.to_rational() {
                Some(q) => {
                    let neg = q < num_traits::Zero::zero();
                    let abs = if neg { -q } else { q };
                    if neg {
                        f.write_str(if first { "-" } else { " - " })?;
                    } else if !first {
                        f.write_str(" + ")?;
                    }
                    let unit = num_traits::One::is_one(&abs);
                    match (mono.is_empty(), unit) {
                        (true, _) => write!(f, "{abs}")?,
                        (false, true) => f.write_str(&mono)?,
                        (false, false) => write!(f, "{abs}*{mono}")?,
                    }
                }
                None => {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    if mono.is_empty() {
                        write!(f, "({c})")?;
                    } else {
                        write!(f, "({c})*{mono}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(Spelling::Xy))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
