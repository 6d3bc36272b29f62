//! Finite-dimensional modules given by the matrices of `d` and `u`.
//!
//! Matrices act on coordinate columns, so `D * U` is "apply `u`, then `d`".

mod filtration;
mod weights;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::{lambda_seq, minimal_zero};
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::linalg::{Echelon, Matrix};
use crate::skewalgebra::Params;

pub use filtration::{torsion_filtration, TorsionReport};
pub use weights::{weight_decomposition, Weight, WeightData};

/// Where a module came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModuleLabel {
    VermaQuotient,
    Simple,
    Orbit,
    Dual,
    Raw,
}

impl ModuleLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ModuleLabel::VermaQuotient => "verma_quotient",
            ModuleLabel::Simple => "simple",
            ModuleLabel::Orbit => "orbit",
            ModuleLabel::Dual => "dual",
            ModuleLabel::Raw => "raw",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "verma_quotient" => ModuleLabel::VermaQuotient,
            "simple" => ModuleLabel::Simple,
            "orbit" => ModuleLabel::Orbit,
            "dual" => ModuleLabel::Dual,
            "raw" => ModuleLabel::Raw,
            _ => return None,
        })
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FDModule {
    params: Params,
    d: Matrix,
    u: Matrix,
    label: ModuleLabel,
}

impl FDModule {
    /// Wraps two matrices without checking the relations.
    pub fn new(params: &Params, d: Matrix, u: Matrix, label: ModuleLabel) -> Result<Self> {
        let n = d.rows();
        if !d.is_square() || u.rows() != n || u.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "D is {}x{}, U is {}x{}",
                d.rows(),
                d.cols(),
                u.rows(),
                u.cols()
            )));
        }
        if d.field() != params.field() || u.field() != params.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(FDModule { params: params.clone(), d, u, label })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.d.rows()
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn u(&self) -> &Matrix {
        &self.u
    }

    pub fn label(&self) -> ModuleLabel {
        self.label
    }

    pub fn with_label(mut self, label: ModuleLabel) -> Self {
        self.label = label;
        self
    }

    fn checked(self) -> Result<Self> {
        if verify_relations(&self).ok {
            Ok(self)
        } else {
            Err(Error::RelationFailure)
        }
    }
}

impl fmt::Debug for FDModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDModule({}, dim {}, D={:?}, U={:?})", self.label, self.dim(), self.d, self.u)
    }
}

/// Residuals of both defining relations on a module.
#[derive(Debug, Clone)]
pub struct RelationReport {
    /// `D^2 U - alpha D U D - beta U D^2 - gamma D`.
    pub residual1: Matrix,
    /// `D U^2 - alpha U D U - beta U^2 D - gamma U`.
    pub residual2: Matrix,
    pub ok: bool,
}

pub fn verify_relations(m: &FDModule) -> RelationReport {
    let p = &m.params;
    let (d, u) = (&m.d, &m.u);
    let r1 = d
        .mul(d)
        .mul(u)
        .sub(&d.mul(u).mul(d).scale(p.alpha()))
        .sub(&u.mul(d).mul(d).scale(p.beta()))
        .sub(&d.scale(p.gamma()));
    let r2 = d
        .mul(u)
        .mul(u)
        .sub(&u.mul(d).mul(u).scale(p.alpha()))
        .sub(&u.mul(u).mul(d).scale(p.beta()))
        .sub(&u.scale(p.gamma()));
    let ok = r1.is_zero() && r2.is_zero();
    RelationReport { residual1: r1, residual2: r2, ok }
}

/// `V(lambda) / span{v_j : j >= n}` on the basis `v_0, ..., v_{n-1}`.
pub fn verma_quotient(p: &Params, lambda: &FieldElement, n: usize) -> Result<FDModule> {
    if lambda.field() != p.field() {
        return Err(Error::FieldMismatch);
    }
    if n == 0 {
        return Err(Error::DimensionMismatch("dimension must be positive".into()));
    }
    let lam = lambda_seq(p, lambda, n - 1);
    if !lam[n - 1].is_zero() {
        return Err(Error::NotSubmoduleBoundary { index: n - 1, value: lam[n - 1].to_string() });
    }
    let field = p.field();
    let mut d = Matrix::zeros(field, n, n);
    let mut u = Matrix::zeros(field, n, n);
    for i in 0..n {
        if i + 1 < n {
            u.set(i + 1, i, field.one());
        }
        if i > 0 {
            d.set(i - 1, i, lam[i - 1].clone());
        }
    }
    FDModule::new(p, d, u, ModuleLabel::VermaQuotient)?
        .checked()
        .map_err(|_| Error::InternalConsistency("Verma quotient violates the relations".into()))
}

/// The simple quotient `L(lambda)`, when its dimension is at most `bound`.
pub fn simple_module(p: &Params, lambda: &FieldElement, bound: usize) -> Result<FDModule> {
    let n = minimal_zero(p, lambda, bound).ok_or(Error::NoZeroWithinBound { bound })?;
    let m = verma_quotient(p, lambda, n)?.with_label(ModuleLabel::Simple);
    if !is_simple(&m) {
        return Err(Error::NotSimple);
    }
    Ok(m)
}

/// The module `M_P` on `e_i = 1 + sigma^i(P)` for the orbit `P, sigma(P), ...`
/// given by points `(a_i, b_i)` with `sigma^i(P) = (x - a_i, y - b_i)`.
pub fn orbit_module(p: &Params, point: &(FieldElement, FieldElement), orbit: &[(FieldElement, FieldElement)]) -> Result<FDModule> {
    let n = orbit.len();
    if n == 0 {
        return Err(Error::NotAnOrbit { reason: "empty orbit".into() });
    }
    if &orbit[0] != point {
        return Err(Error::NotAnOrbit { reason: "orbit does not start at the point".into() });
    }
    let sigma = p.sigma();
    for i in 0..n {
        let (a, b) = &orbit[i];
        if a.field() != p.field() || b.field() != p.field() {
            return Err(Error::FieldMismatch);
        }
        let next = sigma.ideal_point_image(a, b);
        if next != orbit[(i + 1) % n] {
            return Err(Error::NotAnOrbit { reason: format!("sigma does not map point {i} to point {}", (i + 1) % n) });
        }
        if orbit[..i].contains(&orbit[i]) {
            return Err(Error::NotAnOrbit { reason: format!("period is not minimal: point {i} repeats") });
        }
    }
    let field = p.field();
    let mut d = Matrix::zeros(field, n, n);
    let mut u = Matrix::zeros(field, n, n);
    for i in 0..n {
        let prev = (i + n - 1) % n;
        d.set((i + 1) % n, i, field.one());
        let a = &orbit[prev].0;
        let cur = u.get(prev, i).clone();
        u.set(prev, i, &cur + a);
    }
    FDModule::new(p, d, u, ModuleLabel::Orbit)?
        .checked()
        .map_err(|_| Error::InternalConsistency("orbit module violates the relations".into()))
}

/// `D' = U^T`, `U' = D^T`.
pub fn dual_module(m: &FDModule) -> Result<FDModule> {
    FDModule::new(&m.params, m.u.transpose(), m.d.transpose(), ModuleLabel::Dual)?.checked()
}

/// Whether `D` and `U` generate the full matrix algebra.
pub fn is_simple(m: &FDModule) -> bool {
    generated_algebra_dim(m) == m.dim() * m.dim()
}

/// Dimension of the unital algebra generated by `D` and `U`.
pub fn generated_algebra_dim(m: &FDModule) -> usize {
    let n = m.dim();
    let field = m.params.field();
    let mut span = Echelon::new(field, n * n);
    let id = Matrix::identity(field, n);
    span.insert(id.entries());
    let mut queue: Vec<Matrix> = alloc::vec![id];
    while let Some(x) = queue.pop() {
        if span.dim() == n * n {
            break;
        }
        for g in [&m.d, &m.u] {
            let y = g.mul(&x);
            if span.insert(y.entries()) {
                queue.push(y);
            }
        }
    }
    span.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::NumberField;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    #[test]
    fn verma_examples() {
        let f = q();
        let p = Params::from_ints(2, -1, 1).unwrap();
        let m = verma_quotient(&p, &f.from_int(-1), 3).unwrap();
        assert_eq!(m.d().get(0, 1), &f.from_int(-1));
        assert_eq!(m.d().get(1, 2), &f.from_int(-1));
        assert_eq!(m.u().get(1, 0), &f.one());
        let p0 = Params::from_ints(0, 1, 1).unwrap();
        let m = verma_quotient(&p0, &f.zero(), 1).unwrap();
        assert!(m.d().is_zero() && m.u().is_zero());
        assert_eq!(
            verma_quotient(&p, &f.one(), 2).unwrap_err(),
            Error::NotSubmoduleBoundary { index: 1, value: "3".into() }
        );
    }

    #[test]
    fn simple_examples() {
        let f = q();
        let m = simple_module(&Params::from_ints(2, -1, 1).unwrap(), &f.from_int(-1), 10).unwrap();
        assert_eq!(m.dim(), 3);
        let m = simple_module(&Params::from_ints(0, 1, 1).unwrap(), &f.from_int(-1), 10).unwrap();
        assert_eq!(m.dim(), 3);
        let m = simple_module(&Params::from_ints(-1, 2, 1).unwrap(), &f.zero(), 10).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(
            simple_module(&Params::from_ints(2, -1, 1).unwrap(), &f.one(), 10).unwrap_err(),
            Error::NoZeroWithinBound { bound: 10 }
        );
    }

    #[test]
    fn simplicity() {
        let f = q();
        let p = Params::from_ints(2, -1, 1).unwrap();
        assert!(is_simple(&verma_quotient(&p, &f.from_int(-1), 3).unwrap()));
        let zero = FDModule::new(&p, Matrix::zeros(&f, 2, 2), Matrix::zeros(&f, 2, 2), ModuleLabel::Raw).unwrap();
        assert!(!is_simple(&zero));
        let p = Params::from_ints(-1, 2, 1).unwrap();
        assert!(!is_simple(&verma_quotient(&p, &f.zero(), 3).unwrap()));
    }

    #[test]
    fn orbit_example() {
        let f = q();
        let p = Params::from_ints(-1, -1, 0).unwrap();
        let pt = |a: i64, b: i64| (f.from_int(a), f.from_int(b));
        let orbit = [pt(1, 1), pt(-2, 1), pt(1, -2)];
        let m = orbit_module(&p, &orbit[0], &orbit).unwrap();
        assert_eq!(m.dim(), 3);
        assert!(is_simple(&m));
        assert_eq!(m.d().rank(), 3);
        // U e_i = a_{i-1} e_{i-1}
        assert_eq!(m.u().get(2, 0), &f.one());
        assert_eq!(m.u().get(0, 1), &f.one());
        assert_eq!(m.u().get(1, 2), &f.from_int(-2));
        let bad = [pt(1, 1), pt(1, -2), pt(-2, 1)];
        assert!(matches!(orbit_module(&p, &bad[0], &bad), Err(Error::NotAnOrbit { .. })));
    }

    #[test]
    fn fixed_point_module() {
        let f = q();
        // (a, b) = sigma-fixed point for (1, 2, 3): a = b, (b - a - 3) / 2 = a -> a = b = -3/2
        let p = Params::from_ints(1, 2, 3).unwrap();
        let c = f.from_rational(crate::Rational::new((-3).into(), 2.into()));
        let pt = (c.clone(), c.clone());
        let m = orbit_module(&p, &pt, &[pt.clone()]).unwrap();
        assert_eq!(m.d().get(0, 0), &f.one());
        assert_eq!(m.u().get(0, 0), &c);
    }

    #[test]
    fn relation_reports() {
        let f = q();
        let p = Params::from_ints(2, -1, 1).unwrap();
        let id = Matrix::identity(&f, 1);
        let raw = FDModule::new(&p, id.clone(), id, ModuleLabel::Raw).unwrap();
        let r = verify_relations(&raw);
        assert!(!r.ok);
        assert_eq!(r.residual1.get(0, 0), &f.from_int(-1));
        let z = Matrix::zeros(&f, 1, 1);
        assert!(verify_relations(&FDModule::new(&p, z.clone(), z, ModuleLabel::Raw).unwrap()).ok);
    }

    #[test]
    fn duals() {
        let f = q();
        let p = Params::from_ints(2, -1, 1).unwrap();
        let m = simple_module(&p, &f.from_int(-2), 10).unwrap();
        let dd = dual_module(&dual_module(&m).unwrap()).unwrap();
        assert_eq!((dd.d(), dd.u()), (m.d(), m.u()));
    }
}
