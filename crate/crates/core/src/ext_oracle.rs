//! Hom and Ext¹ between finite-dimensional modules by exact linear algebra.
//!
//! An extension of `n` by `m` is a module structure on `m ⊕ n` of the form
//! `D = [[D_m, X], [0, D_n]]`, `U = [[U_m, Y], [0, U_n]]`.

use alloc::vec::Vec;

use crate::classify::{semisimplicity_verdict, simples_of_dim, SemisimplicityAnswer, SemisimplicityVerdict, SimplesOfDim, DEFAULT_XMN_BOUND};
use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, NumberField};
use crate::linalg::{Echelon, Matrix};
use crate::repmod::{verma_quotient, FDModule, ModuleLabel};
use crate::skewalgebra::{AlgebraType, Params};

/// A homogeneous system `A v = 0`.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: Matrix,
    pub rank: usize,
}

impl LinearSystem {
    pub fn new(matrix: Matrix) -> Self {
        let rank = matrix.rank();
        LinearSystem { matrix, rank }
    }

    /// Builds the matrix of a linear map from the images of the unit vectors.
    pub fn from_images(field: &NumberField, rows: usize, images: &[Vec<FieldElement>]) -> Self {
        Self::new(Matrix::from_fn(field, rows, images.len(), |r, c| images[c][r].clone()))
    }

    pub fn unknowns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn solution_dim(&self) -> usize {
        self.unknowns() - self.rank
    }

    pub fn solutions(&self) -> Vec<Vec<FieldElement>> {
        self.matrix.nullspace()
    }
}

fn same_params(m: &FDModule, n: &FDModule) -> Result<()> {
    if m.params() != n.params() {
        return Err(Error::ParamsMismatch);
    }
    Ok(())
}

fn unit_matrix(field: &NumberField, rows: usize, cols: usize, k: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |r, c| if r * cols + c == k { field.one() } else { field.zero() })
}

fn flatten(ms: &[&Matrix]) -> Vec<FieldElement> {
    ms.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

fn hom_system(m: &FDModule, n: &FDModule) -> LinearSystem {
    let field = m.params().field();
    let (a, b) = (n.dim(), m.dim());
    let images: Vec<_> = (0..a * b)
        .map(|k| {
            let phi = unit_matrix(field, a, b, k);
            let ed = phi.mul(m.d()).sub(&n.d().mul(&phi));
            let eu = phi.mul(m.u()).sub(&n.u().mul(&phi));
            flatten(&[&ed, &eu])
        })
        .collect();
    LinearSystem::from_images(field, 2 * a * b, &images)
}

/// `dim Hom(m, n)`.
pub fn hom_dim(m: &FDModule, n: &FDModule) -> Result<usize> {
    same_params(m, n)?;
    Ok(hom_system(m, n).solution_dim())
}

/// The block matrix `[[top, off], [0, bottom]]`.
fn block(top: &Matrix, off: &Matrix, bottom: &Matrix) -> Matrix {
    let (a, b) = (top.rows(), bottom.rows());
    let field = top.field();
    Matrix::from_fn(field, a + b, a + b, |r, c| match (r < a, c < a) {
        (true, true) => top.get(r, c).clone(),
        (true, false) => off.get(r, c - a).clone(),
        (false, false) => bottom.get(r - a, c - a).clone(),
        (false, true) => field.zero(),
    })
}

/// The module on `m ⊕ n` with off-diagonal blocks `x` (for `d`) and `y` (for `u`),
/// without checking the relations.
pub fn extension_module(m: &FDModule, n: &FDModule, x: &Matrix, y: &Matrix) -> Result<FDModule> {
    same_params(m, n)?;
    if (x.rows(), x.cols()) != (m.dim(), n.dim()) || (y.rows(), y.cols()) != (m.dim(), n.dim()) {
        return Err(Error::DimensionMismatch("off-diagonal blocks have the wrong shape".into()));
    }
    FDModule::new(m.params(), block(m.d(), x, n.d()), block(m.u(), y, n.u()), ModuleLabel::Raw)
}

fn top_right(e: &Matrix, a: usize) -> Matrix {
    Matrix::from_fn(e.field(), a, e.cols() - a, |r, c| e.get(r, c + a).clone())
}

fn relation_blocks(m: &FDModule, n: &FDModule, x: &Matrix, y: &Matrix) -> (Matrix, Matrix) {
    let p = m.params();
    let d = block(m.d(), x, n.d());
    let u = block(m.u(), y, n.u());
    let (a, b, g) = (p.alpha(), p.beta(), p.gamma());
    let dd = d.mul(&d);
    let uu = u.mul(&u);
    let r1 = dd.mul(&u).sub(&d.mul(&u).mul(&d).scale(a)).sub(&u.mul(&dd).scale(b)).sub(&d.scale(g));
    let r2 = d.mul(&uu).sub(&u.mul(&d).mul(&u).scale(a)).sub(&uu.mul(&d).scale(b)).sub(&u.scale(g));
    (top_right(&r1, m.dim()), top_right(&r2, m.dim()))
}

fn cocycle_system(m: &FDModule, n: &FDModule) -> LinearSystem {
    let field = m.params().field();
    let (a, b) = (m.dim(), n.dim());
    let zero = Matrix::zeros(field, a, b);
    let images: Vec<_> = (0..2 * a * b)
        .map(|k| {
            let (x, y) = if k < a * b {
                (unit_matrix(field, a, b, k), zero.clone())
            } else {
                (zero.clone(), unit_matrix(field, a, b, k - a * b))
            };
            let (r1, r2) = relation_blocks(m, n, &x, &y);
            flatten(&[&r1, &r2])
        })
        .collect();
    LinearSystem::from_images(field, 2 * a * b, &images)
}

/// `(D_m psi - psi D_n, U_m psi - psi U_n)` flattened.
fn coboundary(m: &FDModule, n: &FDModule, psi: &Matrix) -> Vec<FieldElement> {
    let x = m.d().mul(psi).sub(&psi.mul(n.d()));
    let y = m.u().mul(psi).sub(&psi.mul(n.u()));
    flatten(&[&x, &y])
}

fn coboundary_space(m: &FDModule, n: &FDModule) -> Echelon {
    let field = m.params().field();
    let (a, b) = (m.dim(), n.dim());
    let mut e = Echelon::new(field, 2 * a * b);
    for k in 0..a * b {
        e.insert(&coboundary(m, n, &unit_matrix(field, a, b, k)));
    }
    e
}

/// Whether `(x, y)` gives a module structure on `m ⊕ n`.
pub fn is_cocycle(m: &FDModule, n: &FDModule, x: &Matrix, y: &Matrix) -> Result<bool> {
    let e = extension_module(m, n, x, y)?;
    Ok(crate::repmod::verify_relations(&e).ok)
}

/// Whether `(x, y)` is the coboundary of some `psi`, i.e. the extension splits.
pub fn is_coboundary(m: &FDModule, n: &FDModule, x: &Matrix, y: &Matrix) -> Result<bool> {
    extension_module(m, n, x, y)?;
    Ok(coboundary_space(m, n).contains(&flatten(&[x, y])))
}

/// Checks that every coboundary satisfies the cocycle equations.
pub fn coboundaries_are_cocycles(m: &FDModule, n: &FDModule) -> Result<bool> {
    same_params(m, n)?;
    let sys = cocycle_system(m, n);
    Ok(coboundary_space(m, n).basis().iter().all(|v| sys.matrix.apply(v).iter().all(FieldElement::is_zero)))
}

/// `dim` of the space of extensions with `m` as submodule and `n` as quotient.
pub fn ext1_dim(m: &FDModule, n: &FDModule) -> Result<usize> {
    same_params(m, n)?;
    Ok(cocycle_system(m, n).solution_dim() - coboundary_space(m, n).dim())
}

/// Cocycles `(x, y)` whose classes form a basis of the extension space.
pub fn ext1_representatives(m: &FDModule, n: &FDModule) -> Result<Vec<(Matrix, Matrix)>> {
    same_params(m, n)?;
    let field = m.params().field();
    let (a, b) = (m.dim(), n.dim());
    let mut span = coboundary_space(m, n);
    let mut reps = Vec::new();
    for v in cocycle_system(m, n).solutions() {
        if span.insert(&v) {
            let x = Matrix::from_fn(field, a, b, |r, c| v[r * b + c].clone());
            let y = Matrix::from_fn(field, a, b, |r, c| v[a * b + r * b + c].clone());
            reps.push((x, y));
        }
    }
    Ok(reps)
}

/// A simple module `L(lambda)` of the given dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleTag {
    pub lambda: FieldElement,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbePair {
    pub from: SimpleTag,
    pub to: SimpleTag,
    pub ext1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    /// Ordered pairs with nonzero `ext1_dim(from, to)`.
    pub pairs: Vec<ProbePair>,
    pub dim_bound: usize,
    /// Dimensions whose simples form a cofinite family and were skipped.
    pub skipped_dims: Vec<usize>,
    pub verdict: Option<SemisimplicityVerdict>,
    /// False when the verdict claims semisimplicity but a nonzero pair was found.
    pub consistent: bool,
}

/// The simples of dimension at most `dim_bound`, built as Verma quotients.
pub fn simples_up_to(p: &Params, dim_bound: usize) -> Result<(Vec<(SimpleTag, FDModule)>, Vec<usize>)> {
    let mut simples = Vec::new();
    let mut skipped = Vec::new();
    for n in 1..=dim_bound {
        match simples_of_dim(p, n)? {
            SimplesOfDim::Finite(ls) => {
                for l in ls {
                    let m = verma_quotient(p, &l, n)?.with_label(ModuleLabel::Simple);
                    simples.push((SimpleTag { lambda: l, dim: n }, m));
                }
            }
            SimplesOfDim::AllExcept(_) => skipped.push(n),
        }
    }
    Ok((simples, skipped))
}

pub fn semisimplicity_probe(p: &Params, dim_bound: usize) -> Result<ProbeReport> {
    let (simples, skipped_dims) = simples_up_to(p, dim_bound)?;
    let mut pairs = Vec::new();
    for (ta, ma) in &simples {
        for (tb, mb) in &simples {
            let k = ext1_dim(ma, mb)?;
            if k > 0 {
                pairs.push(ProbePair { from: ta.clone(), to: tb.clone(), ext1: k });
            }
        }
    }
    let verdict = if p.algebra_type() == AlgebraType::D {
        Some(semisimplicity_verdict(p, DEFAULT_XMN_BOUND)?)
    } else {
        None
    };
    let consistent = !matches!(&verdict, Some(v) if v.answer == SemisimplicityAnswer::Semisimple && !pairs.is_empty());
    Ok(ProbeReport { pairs, dim_bound, skipped_dims, verdict, consistent })
}
