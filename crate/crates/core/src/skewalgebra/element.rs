use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::{power_sequence_terms, BivarPoly, Params, Spelling};
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;

/// An element of `A(alpha, beta, gamma)` in graded normal form.
///
/// Internally the element is kept in the skew Laurent ring
/// `S = R[z, z^-1; sigma]` as `sum_n z^-n s_n` (`d = z^-1`, `u = x z`,
/// `r z = z sigma(r)`). The normal-form coefficient at degree `n` is
/// `p_n = s_n` for `n >= 0` and `p_n = s_n / x_m` for `n = -m < 0`, since
/// `u^m p = z^m x_m p`.
#[derive(Clone)]
pub struct AlgebraElement {
    params: Params,
    terms: BTreeMap<i64, BivarPoly>,
}

impl AlgebraElement {
    pub fn zero(params: &Params) -> Self {
        AlgebraElement { params: params.clone(), terms: BTreeMap::new() }
    }

    pub fn one(params: &Params) -> Self {
        Self::scalar(params, &params.field().one())
    }

    pub fn scalar(params: &Params, c: &FieldElement) -> Self {
        Self::from_s_term(params, 0, BivarPoly::constant(c))
    }

    pub fn d(params: &Params) -> Self {
        Self::from_s_term(params, 1, BivarPoly::one(params.field()))
    }

    pub fn u(params: &Params) -> Self {
        // x z = z sigma(x) = z y
        Self::from_s_term(params, -1, BivarPoly::y(params.field()))
    }

    /// The element `d^n p` (`n >= 0`) or `u^-n p` (`n < 0`) for `p` in `A(0)`
    /// written on `x = ud`, `y = du`.
    pub fn from_coefficient(params: &Params, n: i64, p: &BivarPoly) -> Result<Self> {
        if p.field() != params.field() {
            return Err(Error::FieldMismatch);
        }
        if n >= 0 {
            return Ok(Self::from_s_term(params, n, p.clone()));
        }
        let (xm, _) = power_sequence_terms(params, n.unsigned_abs() as usize)?;
        Ok(Self::from_s_term(params, n, xm.mul(p)))
    }

    /// Builds from `(degree, coefficient)` pairs in normal form.
    pub fn from_normal_form(params: &Params, parts: &[(i64, BivarPoly)]) -> Result<Self> {
        let mut out = Self::zero(params);
        for (n, p) in parts {
            out = out.add(&Self::from_coefficient(params, *n, p)?)?;
        }
        Ok(out)
    }

    fn from_s_term(params: &Params, n: i64, s: BivarPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(n, s);
        }
        AlgebraElement { params: params.clone(), terms }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees with nonzero component, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Normal-form coefficient `p_n`.
    pub fn coefficient(&self, n: i64) -> BivarPoly {
        let field = self.params.field();
        let Some(s) = self.terms.get(&n) else { return BivarPoly::zero(field) };
        if n >= 0 {
            return s.clone();
        }
        let (xm, _) = power_sequence_terms(&self.params, n.unsigned_abs() as usize)
            .expect("power sequences are consistent");
        s.div_exact(&xm).expect("negative-degree components are divisible by x_m")
    }

    /// All nonzero `(degree, p_n)` pairs, ascending by degree.
    pub fn normal_form(&self) -> Vec<(i64, BivarPoly)> {
        self.terms.keys().map(|&n| (n, self.coefficient(n))).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (n, s) in &other.terms {
            let sum = match terms.get(n) {
                Some(t) => t.add(s),
                None => s.clone(),
            };
            if sum.is_zero() {
                terms.remove(n);
            } else {
                terms.insert(*n, sum);
            }
        }
        Ok(AlgebraElement { params: self.params.clone(), terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(n, s)| (*n, s.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.params);
        }
        AlgebraElement {
            params: self.params.clone(),
            terms: self.terms.iter().map(|(n, s)| (*n, s.scale(c))).collect(),
        }
    }

    /// Product in `A`: `(z^-a r)(z^-b s) = z^-(a+b) sigma^-b(r) s`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let sigma = self.params.sigma();
        let mut out: BTreeMap<i64, BivarPoly> = BTreeMap::new();
        for (a, r) in &self.terms {
            for (b, s) in &other.terms {
                let prod = sigma.apply_power(r, -b).mul(s);
                let entry = out.entry(a + b).or_insert_with(|| BivarPoly::zero(self.params.field()));
                *entry = entry.add(&prod);
            }
        }
        out.retain(|_, s| !s.is_zero());
        Ok(AlgebraElement { params: self.params.clone(), terms: out })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.params);
        for _ in 0..e {
            acc = acc.mul(self).expect("same parameters");
        }
        acc
    }

    pub fn display(&self, spelling: Spelling) -> impl fmt::Display + '_ {
        DisplayElement { e: self, spelling }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

/// `a * b` in normal form.
pub fn nf_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.mul(b)
}

pub fn nf_add(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.add(b)
}

pub fn nf_scale(a: &AlgebraElement, c: &FieldElement) -> Result<AlgebraElement> {
    if c.field() != a.params().field() {
        return Err(Error::FieldMismatch);
    }
    Ok(a.scale(c))
}

struct DisplayElement<'a> {
    e: &'a AlgebraElement,
    spelling: Spelling,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, p) in self.e.normal_form().iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let gen = match n {
                0 => None,
                1 => Some(alloc::string::String::from("d")),
                -1 => Some(alloc::string::String::from("u")),
                n if *n > 0 => Some(alloc::format!("d^{n}")),
                n => Some(alloc::format!("u^{}", -n)),
            };
            match gen {
                None => write!(f, "{}", p.display(self.spelling))?,
                Some(g) if p.is_constant() && p.constant_term().is_one() => f.write_str(&g)?,
                Some(g) => write!(f, "{g}*({})", p.display(self.spelling))?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(Spelling::Xy))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
