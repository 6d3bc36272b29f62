use alloc::format;
use alloc::string::String;

use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::linalg::Matrix;
use crate::skewalgebra::{canonical_w_pair, AlgebraElement, AlgebraType, Case, Params};

pub fn algebra_type(p: &Params) -> AlgebraType {
    p.algebra_type()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsoBranch {
    SameParams,
    SwappedParams,
    TypeMismatch,
    ConditionFail,
}

impl IsoBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            IsoBranch::SameParams => "same_params",
            IsoBranch::SwappedParams => "swapped_params",
            IsoBranch::TypeMismatch => "type_mismatch",
            IsoBranch::ConditionFail => "condition_fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub answer: bool,
    pub branch: IsoBranch,
    pub details: String,
}

/// `A(alpha, beta, gamma) ≅ A(alpha', beta', gamma')` iff the types agree and
/// either `(alpha', beta') = (alpha, beta)` or
/// `(alpha', beta') = (-alpha / beta, 1 / beta)`.
pub fn are_isomorphic(p: &Params, q: &Params) -> Result<IsoVerdict> {
    if p.field() != q.field() {
        return Err(Error::FieldMismatch);
    }
    let (tp, tq) = (p.algebra_type(), q.algebra_type());
    if tp != tq {
        return Ok(IsoVerdict {
            answer: false,
            branch: IsoBranch::TypeMismatch,
            details: format!("types {tp} and {tq} differ"),
        });
    }
    if p.alpha() == q.alpha() && p.beta() == q.beta() {
        return Ok(IsoVerdict {
            answer: true,
            branch: IsoBranch::SameParams,
            details: format!("type {tp}, equal (alpha, beta)"),
        });
    }
    let binv = p.beta().inv()?;
    if q.alpha() == &-&(p.alpha() * &binv) && q.beta() == &binv {
        return Ok(IsoVerdict {
            answer: true,
            branch: IsoBranch::SwappedParams,
            details: format!("type {tp}, (alpha', beta') = (-alpha/beta, 1/beta)"),
        });
    }
    Ok(IsoVerdict {
        answer: false,
        branch: IsoBranch::ConditionFail,
        details: format!("type {tp}, neither (alpha, beta) nor (-alpha/beta, 1/beta) matches"),
    })
}

/// `A(-alpha/beta, 1/beta, -gamma/beta)`, isomorphic to `A(alpha, beta, gamma)`
/// by exchanging `d` and `u`.
pub fn swap_transform(p: &Params) -> Result<Params> {
    let binv = p.beta().inv()?;
    Params::new(&-&(p.alpha() * &binv), &binv, &-&(p.gamma() * &binv))
}

/// `A(alpha, beta, c gamma)` for `c != 0`, isomorphic by rescaling `d`.
pub fn rescale_transform(p: &Params, c: &FieldElement) -> Result<Params> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    Params::new(p.alpha(), p.beta(), &(p.gamma() * c))
}

/// The type (c) invariant: the matrix of `sigma` on the normal elements.
#[derive(Debug, Clone)]
pub struct TypeCInvariant {
    /// `diag(l1, l2)` or the Jordan block `[[alpha/2, 1], [0, alpha/2]]`.
    pub matrix: Matrix,
    pub diagonal: bool,
    pub w1: AlgebraElement,
    pub w2: AlgebraElement,
}

impl TypeCInvariant {
    /// Eigenvalues with multiplicity, sorted.
    pub fn eigenvalues(&self) -> [FieldElement; 2] {
        let mut e = [self.matrix.get(0, 0).clone(), self.matrix.get(1, 1).clone()];
        e.sort();
        e
    }
}

pub fn typec_invariant(p: &Params) -> Result<TypeCInvariant> {
    if p.algebra_type() != AlgebraType::C {
        return Err(Error::NotTypeC);
    }
    let field = p.field();
    let pair = canonical_w_pair(p)?;
    let w1 = AlgebraElement::from_coefficient(p, 0, &pair.w1)?;
    let w2 = AlgebraElement::from_coefficient(p, 0, &pair.w2)?;
    let d = AlgebraElement::d(p);
    let u = AlgebraElement::u(p);
    // d w = sigma(w) d and w u = u sigma(w)
    let check = |w: &AlgebraElement, image: &AlgebraElement| -> Result<bool> {
        Ok(d.mul(w)? == image.mul(&d)? && w.mul(&u)? == u.mul(image)?)
    };
    let (matrix, diagonal) = match pair.case {
        Case::Case1 => {
            let (l1, l2) = (pair.eq1.scale.clone(), pair.eq2.scale.clone());
            if !check(&w1, &w1.scale(&l1))? || !check(&w2, &w2.scale(&l2))? {
                return Err(Error::InternalConsistency("normal elements fail their commutation rules".into()));
            }
            let m = Matrix::from_rows(field, alloc::vec![alloc::vec![l1, field.zero()], alloc::vec![field.zero(), l2]])?;
            (m, true)
        }
        Case::Case3 => {
            let h = pair.eq1.scale.clone();
            if !check(&w1, &w1.scale(&h))? || !check(&w2, &w2.scale(&h).add(&w1)?)? {
                return Err(Error::InternalConsistency("normal elements fail their commutation rules".into()));
            }
            let m = Matrix::from_rows(field, alloc::vec![alloc::vec![h.clone(), field.one()], alloc::vec![field.zero(), h]])?;
            (m, false)
        }
        _ => return Err(Error::NotTypeC),
    };
    Ok(TypeCInvariant { matrix, diagonal, w1, w2 })
}
