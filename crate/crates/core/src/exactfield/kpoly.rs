//! Univariate polynomials with coefficients in a number field, and root
//! finding in that field.
//!
//! Roots are found by reducing to factorization over `Q`: for squarefree `f`
//! and a shift `s` making `N(y) = Norm(f(y - s t))` squarefree, every linear
//! factor of `f` over the field equals `gcd(f(y), h(y + s t))` for some
//! irreducible rational factor `h` of `N` whose degree equals the field degree.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::qpoly::interpolate;
use super::{factor_rational, FieldElement, NumberField, QPoly, Rational};

/// A polynomial over a [`NumberField`], ascending coefficients, no trailing
/// zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct KPoly {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl KPoly {
    pub fn new(field: &NumberField, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        KPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &NumberField) -> Self {
        KPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// `y - root`.
    pub fn linear(root: &FieldElement) -> Self {
        let field = root.field();
        Self::new(field, vec![-root, field.one()])
    }

    pub fn from_rational(field: &NumberField, p: &QPoly) -> Self {
        Self::new(field, p.coeffs().iter().map(|c| field.from_rational(c.clone())).collect())
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational polynomial with the same coefficients, when all lie in `Q`.
    pub fn to_rational(&self) -> Option<QPoly> {
        self.coeffs.iter().map(FieldElement::to_rational).collect::<Option<Vec<_>>>().map(QPoly::new)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(&self.field, (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor.coeffs[dd].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&c * b);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(&self.field, quot), Self::new(&self.field, rem))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    pub fn eval(&self, y: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * y) + c;
        }
        acc
    }

    /// `f(y + c)`.
    pub fn shift(&self, c: &FieldElement) -> Self {
        let lin = Self::new(&self.field, vec![c.clone(), self.field.one()]);
        let mut acc = Self::zero(&self.field);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::new(&self.field, vec![a.clone()]));
        }
        acc
    }

    /// Monic squarefree part `f / gcd(f, f')`.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).0.monic()
    }

    /// The norm `N(y)` over `Q`: the determinant of multiplication by `f` on
    /// `K[y]` viewed as a free `Q[y]`-module on the power basis.
    pub fn norm(&self) -> QPoly {
        let n = self.field.degree();
        let Some(deg) = self.degree() else { return QPoly::zero() };
        if n == 1 {
            return self.to_rational().unwrap();
        }
        let mats: Vec<Vec<Vec<Rational>>> =
            self.coeffs.iter().map(FieldElement::multiplication_matrix).collect();
        let points = n * deg + 1;
        let mut xs = Vec::with_capacity(points);
        let mut ys = Vec::with_capacity(points);
        for p in 0..points {
            let y = Rational::from_integer(BigInt::from(p as i64));
            let mut m = vec![vec![Rational::zero(); n]; n];
            let mut ypow = Rational::one();
            for mat in &mats {
                for r in 0..n {
                    for c in 0..n {
                        m[r][c] += &mat[r][c] * &ypow;
                    }
                }
                ypow *= &y;
            }
            xs.push(y);
            ys.push(det_rational(m));
        }
        interpolate(&xs, &ys)
    }

    /// Distinct roots of `self` in its field, in canonical order, together
    /// with the monic cofactor carrying the part of `self` that has no roots
    /// in the field (one for fully split input).
    pub fn roots(&self) -> (Vec<FieldElement>, KPoly) {
        let field = self.field.clone();
        if self.degree().unwrap_or(0) == 0 {
            return (Vec::new(), KPoly::one(&field));
        }
        let g = self.squarefree_part();
        let mut roots = Vec::new();
        if g.degree() == Some(1) {
            roots.push(-&g.coeffs[0]);
        } else {
            let theta = field.generator();
            let n = field.degree();
            let mut s = 0i64;
            let (shift, norm) = loop {
                let c = theta.scale(&Rational::from_integer(BigInt::from(s)));
                let shifted = g.shift(&-&c);
                let norm = shifted.norm();
                if norm.is_squarefree() {
                    break (c, norm);
                }
                s = if s <= 0 { -s + 1 } else { -s };
            };
            for (h, _) in factor_rational(&norm) {
                if h.degree() != Some(n) {
                    continue;
                }
                let hk = KPoly::from_rational(&field, &h).shift(&shift);
                let common = g.gcd(&hk);
                if common.degree() == Some(1) {
                    roots.push(-&common.coeffs[0]);
                }
            }
        }
        roots.sort();
        let mut rest = self.monic();
        for r in &roots {
            let lin = KPoly::linear(r);
            loop {
                let (q, rem) = rest.divrem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
            }
        }
        (roots, rest)
    }

    /// Multiplicity of `root` as a zero of `self`.
    pub fn multiplicity(&self, root: &FieldElement) -> usize {
        let lin = KPoly::linear(root);
        let mut rest = self.clone();
        let mut m = 0;
        while !rest.is_zero() {
            let (q, r) = rest.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        m
    }
}

/// Determinant of a square rational matrix by Gaussian elimination.
fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match k {
                0 => None,
                1 => Some(alloc::string::String::from("y")),
                _ => Some(alloc::format!("y^{k}")),
            };
            match (mono, c.is_one()) {
                (None, _) => write!(f, "({c})")?,
                (Some(m), true) => f.write_str(&m)?,
                (Some(m), false) => write!(f, "({c})*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_rational_polynomial_is_power() {
        let k = NumberField::cyclotomic3();
        let f = KPoly::from_rational(&k, &QPoly::from_ints(&[-2, 0, 1]));
        assert_eq!(f.norm(), QPoly::from_ints(&[-2, 0, 1]).pow(2));
    }

    #[test]
    fn sqrt_minus_three_in_q_zeta3() {
        let k = NumberField::cyclotomic3();
        let f = KPoly::from_rational(&k, &QPoly::from_ints(&[3, 0, 1]));
        let (roots, rest) = f.roots();
        assert_eq!(roots.len(), 2);
        assert_eq!(rest, KPoly::one(&k));
        for r in &roots {
            assert_eq!(&(r * r), &k.from_int(-3));
        }
    }

    #[test]
    fn irrational_roots_are_reported_as_cofactor() {
        let q = NumberField::rationals();
        let f = KPoly::from_rational(&q, &QPoly::from_ints(&[-1, -1, 1]).mul(&QPoly::from_ints(&[-2, 1])));
        let (roots, rest) = f.roots();
        assert_eq!(roots, vec![q.from_int(2)]);
        assert_eq!(rest.to_rational().unwrap(), QPoly::from_ints(&[-1, -1, 1]));
    }

    #[test]
    fn cube_roots_of_unity_split_over_zeta3() {
        let k = NumberField::cyclotomic3();
        let f = KPoly::from_rational(&k, &QPoly::from_ints(&[-1, 0, 0, 1]));
        let (roots, rest) = f.roots();
        assert_eq!(roots.len(), 3);
        assert_eq!(rest, KPoly::one(&k));
        for r in roots {
            assert!(r.pow(3).is_one());
        }
    }

    #[test]
    fn multiplicities() {
        let q = NumberField::rationals();
        let f = KPoly::from_rational(&q, &QPoly::from_ints(&[-1, 1]).pow(3).mul(&QPoly::from_ints(&[1, 1])));
        assert_eq!(f.multiplicity(&q.one()), 3);
        assert_eq!(f.multiplicity(&q.from_int(-1)), 1);
        let (roots, _) = f.roots();
        assert_eq!(roots, vec![q.from_int(-1), q.one()]);
    }
}
