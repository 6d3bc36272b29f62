//! Dense matrices over a number field and exact elimination.
//!
//! Pivots are chosen as the first nonzero entry in a column: the field has
//! no order, and results must be deterministic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, KPoly, NumberField, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: NumberField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(field: &NumberField, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &NumberField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &NumberField, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!("ragged row of length {}, expected {c}", row.len())));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch);
                }
                data.push(e);
            }
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data })
    }

    pub fn from_fn(field: &NumberField, rows: usize, cols: usize, f: impl Fn(usize, usize) -> FieldElement) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Column matrix holding `v`.
    pub fn column(field: &NumberField, v: &[FieldElement]) -> Self {
        Matrix { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix dimensions must agree")
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&FieldElement, &FieldElement) -> FieldElement) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols, "matrix dimensions must agree");
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r).iter().zip(v).fold(self.field.zero(), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().unwrap();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c) - &(&factor * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<FieldElement>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, fc);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(y I - self)` by the Faddeev-LeVerrier
    /// recursion (valid in characteristic zero).
    pub fn charpoly(&self) -> KPoly {
        assert!(self.is_square());
        let n = self.rows;
        let field = &self.field;
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        let ident = Matrix::identity(field, n);
        let mut m = Matrix::zeros(field, n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&ident.scale(&coeffs[n - k + 1]));
            let tr = self.mul(&m).trace();
            let inv_k = Rational::new(BigInt::from(-1), BigInt::from(k as i64));
            coeffs[n - k] = tr.scale(&inv_k);
        }
        KPoly::new(field, coeffs)
    }

    /// Basis of the kernel as column vectors (alias of [`Matrix::nullspace`]).
    pub fn kernel(&self) -> Vec<Vec<FieldElement>> {
        self.nullspace()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `K^len`.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: NumberField,
    len: usize,
    // rows sorted by pivot; each row has a 1 at its pivot and zeros before it
    rows: Vec<(usize, Vec<FieldElement>)>,
}

impl Echelon {
    pub fn new(field: &NumberField, len: usize) -> Self {
        Echelon { field: field.clone(), len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    fn reduce(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(*p) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v).iter().all(FieldElement::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.len);
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else { return false };
        let inv = r[p].inv().unwrap();
        let r: Vec<FieldElement> = r.iter().map(|x| x * &inv).collect();
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        true
    }

    pub fn basis(&self) -> Vec<Vec<FieldElement>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }
}

/// Dimension of the span of `vectors` inside `K^len`.
pub fn span_dim(field: &NumberField, len: usize, vectors: &[Vec<FieldElement>]) -> usize {
    let mut e = Echelon::new(field, len);
    for v in vectors {
        e.insert(v);
    }
    e.dim()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(field: &NumberField, len: usize, a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum x_i a_i - sum y_j b_j = 0 and map back through a.
    let cols = a.len() + b.len();
    let m = Matrix::from_fn(field, len, cols, |r, c| {
        if c < a.len() {
            a[c][r].clone()
        } else {
            -&b[c - a.len()][r]
        }
    });
    let mut out = Echelon::new(field, len);
    for sol in m.nullspace() {
        let v: Vec<FieldElement> = (0..len)
            .map(|r| (0..a.len()).fold(field.zero(), |acc, i| &acc + &(&sol[i] * &a[i][r])))
            .collect();
        out.insert(&v);
    }
    out.basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::QPoly;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let q = NumberField::rationals();
        Matrix::from_rows(&q, rows.iter().map(|r| r.iter().map(|&x| q.from_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.apply(&ns[0]).iter().all(FieldElement::is_zero));
    }

    #[test]
    fn charpoly_of_companion() {
        // companion matrix of y^3 - 2y + 5
        let m = mat(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        let cp = m.charpoly();
        assert_eq!(cp.to_rational().unwrap(), QPoly::from_ints(&[5, -2, 0, 1]));
    }

    #[test]
    fn echelon_membership() {
        let q = NumberField::rationals();
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_int(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(&q, 3);
        assert!(e.insert(&v(&[0, 1, 1])));
        assert!(e.insert(&v(&[1, 1, 0])));
        assert!(!e.insert(&v(&[1, 2, 1])));
        assert!(e.contains(&v(&[2, 3, 1])));
        assert!(!e.contains(&v(&[0, 0, 1])));
        assert_eq!(e.dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let q = NumberField::rationals();
        let v = |xs: &[i64]| xs.iter().map(|&x| q.from_int(x)).collect::<Vec<_>>();
        let a = [v(&[1, 0, 0]), v(&[0, 1, 0])];
        let b = [v(&[0, 1, 0]), v(&[0, 0, 1])];
        let i = intersect(&q, 3, &a, &b);
        assert_eq!(i.len(), 1);
        assert_eq!(i[0], v(&[0, 1, 0]));
    }
}
