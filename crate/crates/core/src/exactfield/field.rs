use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::qpoly::write_term;
use super::{factor_rational, QPoly, Rational};
use crate::error::{Error, Result};

struct FieldInner {
    minpoly: QPoly,
    name: String,
    degree: usize,
    // reduction[k] = t^(degree + k) mod minpoly, as a coefficient vector
    reduction: Vec<Vec<Rational>>,
}

/// The number field `Q[t]/(m(t))` for a monic irreducible `m`.
///
/// Handles are cheap to clone. Two handles denote the same field when their
/// minimal polynomials agree; the generator name is only a display label.
#[derive(Clone)]
pub struct NumberField {
    inner: Arc<FieldInner>,
}

impl NumberField {
    /// Builds `Q[t]/(m)` from the ascending coefficient list of `m`.
    ///
    /// The constant list `[1]` is accepted as shorthand for `Q` itself.
    pub fn new(minpoly: &[Rational], name: &str) -> Result<Self> {
        let m = QPoly::new(minpoly.to_vec());
        if minpoly.is_empty() || !m.is_monic() || minpoly.last().is_some_and(Zero::is_zero) {
            return Err(Error::NotMonic);
        }
        if m.degree() == Some(0) {
            return Ok(Self::rationals());
        }
        let factors = factor_rational(&m);
        if factors.len() > 1 || factors[0].1 > 1 {
            return Err(Error::Reducible { factor: factors[0].0.clone() });
        }
        Ok(Self::from_irreducible(m, name))
    }

    pub fn rationals() -> Self {
        Self::from_irreducible(QPoly::from_ints(&[0, 1]), "t")
    }

    /// `Q(zeta_3)`, the splitting field of `t^2 + t + 1`.
    pub fn cyclotomic3() -> Self {
        Self::from_irreducible(QPoly::from_ints(&[1, 1, 1]), "w")
    }

    fn from_irreducible(minpoly: QPoly, name: &str) -> Self {
        let degree = minpoly.degree().unwrap();
        let tail: Vec<Rational> = (0..degree).map(|k| -minpoly.coeff(k)).collect();
        let mut reduction = Vec::with_capacity(degree);
        let mut cur = tail.clone();
        for _ in 0..degree.saturating_sub(1) {
            reduction.push(cur.clone());
            // multiply by t and reduce
            let top = cur[degree - 1].clone();
            let mut next = vec![Rational::zero(); degree];
            for k in (1..degree).rev() {
                next[k] = cur[k - 1].clone();
            }
            for k in 0..degree {
                next[k] += &top * &tail[k];
            }
            cur = next;
        }
        if degree >= 1 {
            reduction.push(cur);
        }
        NumberField {
            inner: Arc::new(FieldInner { minpoly, name: name.to_string(), degree, reduction }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.inner.minpoly
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn is_rationals(&self) -> bool {
        self.inner.degree == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coeffs: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    /// The class of `t`, a root of the minimal polynomial.
    pub fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.from_rational(-self.minpoly().coeff(0));
        }
        let mut e = self.zero();
        e.coeffs[1] = Rational::one();
        e
    }

    /// Element with the given power-basis coordinates; shorter lists are
    /// zero-padded, longer ones reduced modulo the minimal polynomial.
    pub fn element(&self, coeffs: &[Rational]) -> FieldElement {
        let n = self.degree();
        if coeffs.len() <= n {
            let mut c = coeffs.to_vec();
            c.resize(n, Rational::zero());
            return FieldElement { field: self.clone(), coeffs: c };
        }
        if coeffs.len() > 2 * n - 1 {
            let r = QPoly::new(coeffs.to_vec()).rem(self.minpoly());
            return self.element(r.coeffs());
        }
        self.reduce(coeffs.to_vec())
    }

    /// Evaluates a rational polynomial at the generator.
    pub fn eval_poly(&self, p: &QPoly) -> FieldElement {
        self.element(p.coeffs())
    }

    fn reduce(&self, mut raw: Vec<Rational>) -> FieldElement {
        let n = self.degree();
        if n == 1 {
            // t = generator, a rational number
            let g = -self.minpoly().coeff(0);
            let mut acc = Rational::zero();
            for c in raw.iter().rev() {
                acc = acc * &g + c;
            }
            return FieldElement { field: self.clone(), coeffs: vec![acc] };
        }
        let mut out: Vec<Rational> = raw.iter().take(n).cloned().collect();
        out.resize(n, Rational::zero());
        for k in n..raw.len() {
            let c = core::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            let row = &self.inner.reduction[k - n];
            for (o, r) in out.iter_mut().zip(row) {
                *o += &c * r;
            }
        }
        FieldElement { field: self.clone(), coeffs: out }
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.minpoly == other.inner.minpoly
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{0}]/({1})", self.name(), self.minpoly().display_with(self.name()))
    }
}

/// An exact element of a [`NumberField`], stored in the power basis.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    coeffs: Vec<Rational>,
}

/// Binary and unary operations of [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ArithValue {
    Element(FieldElement),
    Bool(bool),
}

/// Checked dispatcher over the field operations. Unary operations ignore `b`.
pub fn field_arith(op: FieldOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<ArithValue> {
    let rhs = || b.ok_or_else(|| Error::DimensionMismatch("binary operation needs two operands".into()));
    Ok(match op {
        FieldOp::Add => ArithValue::Element(a.try_add(rhs()?)?),
        FieldOp::Sub => ArithValue::Element(a.try_sub(rhs()?)?),
        FieldOp::Mul => ArithValue::Element(a.try_mul(rhs()?)?),
        FieldOp::Div => ArithValue::Element(a.try_div(rhs()?)?),
        FieldOp::Neg => ArithValue::Element(-a),
        FieldOp::Inv => ArithValue::Element(a.inv()?),
        FieldOp::Eq => {
            let b = rhs()?;
            a.check_field(b)?;
            ArithValue::Bool(a == b)
        }
    })
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    pub(crate) fn check_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_field(other)?;
        let n = self.field.degree();
        if n == 1 {
            return Ok(FieldElement {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(self.field.reduce(raw))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_field(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coeffs[0].recip()));
        }
        let a = QPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(self.field.minpoly());
        debug_assert!(g.is_one());
        Ok(self.field.element(s.coeffs()))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn scale(&self, q: &Rational) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Matrix of multiplication by `self` on the power basis; column `i` holds
    /// the coordinates of `self * t^i`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut basis = self.field.one();
        let t = self.field.generator();
        for _ in 0..n {
            cols.push((self * &basis).coeffs);
            basis = &basis * &t;
        }
        (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect()
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on power-basis coordinates (constant term first).
/// This is a bookkeeping order for canonical output, not a field ordering.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl core::hash::Hash for FieldElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field element operation failed")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

// Operators panic on mismatched fields or division by zero; use the
// `try_*` methods where inputs are untrusted.
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, k, self.field.name(), first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn field_make_examples() {
        let qf = NumberField::new(&[q(3), q(1)], "t").unwrap();
        assert_eq!(qf.degree(), 1);
        assert_eq!(qf.generator(), qf.from_int(-3));
        assert_eq!(NumberField::new(&[q(1)], "t").unwrap().degree(), 1);

        let z3 = NumberField::new(&[q(1), q(1), q(1)], "z").unwrap();
        assert_eq!(z3.degree(), 2);

        match NumberField::new(&[q(-1), q(0), q(1)], "t") {
            Err(Error::Reducible { factor }) => {
                assert!(factor == QPoly::from_ints(&[-1, 1]) || factor == QPoly::from_ints(&[1, 1]));
            }
            other => panic!("expected Reducible, got {other:?}"),
        }
        assert_eq!(NumberField::new(&[q(1), q(2)], "t").unwrap_err(), Error::NotMonic);
        assert_eq!(NumberField::new(&[], "t").unwrap_err(), Error::NotMonic);
    }

    #[test]
    fn cube_root_of_unity_arithmetic() {
        let k = NumberField::cyclotomic3();
        let w = k.generator();
        let w2 = &w * &w;
        assert!((&w * &w2).is_one());
        assert!((&(&w2 + &w) + &k.one()).is_zero());
        assert_eq!(w.pow(3), k.one());
        assert_eq!(&w.inv().unwrap() * &w, k.one());
        assert_eq!(k.from_int(2).inv().unwrap(), k.from_rational(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn mismatch_and_zero_division() {
        let a = NumberField::rationals().one();
        let b = NumberField::cyclotomic3().one();
        assert_eq!(a.try_add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.field().zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(
            field_arith(FieldOp::Div, &a, Some(&a.field().zero())).unwrap_err(),
            Error::DivisionByZero
        );
        assert_eq!(field_arith(FieldOp::Eq, &a, Some(&a)).unwrap(), ArithValue::Bool(true));
    }

    #[test]
    fn display_forms() {
        let k = NumberField::cyclotomic3();
        let w = k.generator();
        assert_eq!(alloc::format!("{}", -&w - k.one()), "-w - 1");
        assert_eq!(alloc::format!("{}", k.from_rational(Rational::new((-1).into(), 2.into()))), "-1/2");
    }
}
