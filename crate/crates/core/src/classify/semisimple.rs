use alloc::vec::Vec;

use super::lambda::zero_indices;
use crate::error::{Error, Result};
use crate::exactfield::{root_of_unity_order, FieldElement};
use crate::skewalgebra::{AlgebraType, Params};

/// `eta in X_(m,n)`: `eta^m != 1`, `eta^n != 1` and `n (eta^m - 1) = m (eta^n - 1)`.
pub fn xmn_member(eta: &FieldElement, m: u64, n: u64) -> bool {
    let field = eta.field();
    let one = field.one();
    let em = &eta.pow(m) - &one;
    let en = &eta.pow(n) - &one;
    if em.is_zero() || en.is_zero() {
        return false;
    }
    &field.from_int(n as i64) * &em == &field.from_int(m as i64) * &en
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemisimplicityAnswer {
    Semisimple,
    NotSemisimple,
    NoObstructionUpToBound,
    OutOfTheoremScope,
}

impl SemisimplicityAnswer {
    pub fn as_str(self) -> &'static str {
        match self {
            SemisimplicityAnswer::Semisimple => "semisimple",
            SemisimplicityAnswer::NotSemisimple => "not_semisimple",
            SemisimplicityAnswer::NoObstructionUpToBound => "no_obstruction_up_to_bound",
            SemisimplicityAnswer::OutOfTheoremScope => "out_of_theorem_scope",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemisimplicityVerdict {
    pub answer: SemisimplicityAnswer,
    /// `(m, n)` with `m > n` and `eta in X_(m,n)`.
    pub witness: Option<(u64, u64)>,
    pub bound: u64,
}

pub fn semisimplicity_verdict(p: &Params, bound: u64) -> Result<SemisimplicityVerdict> {
    if p.algebra_type() != AlgebraType::D {
        return Err(Error::NotTypeD);
    }
    let eta = p.eta();
    let verdict = |answer, witness| Ok(SemisimplicityVerdict { answer, witness, bound });
    if eta.is_one() {
        return verdict(SemisimplicityAnswer::OutOfTheoremScope, None);
    }
    if root_of_unity_order(eta)?.is_some() {
        return verdict(SemisimplicityAnswer::Semisimple, None);
    }
    for m in 2..=bound {
        for n in 1..m {
            if xmn_member(eta, m, n) {
                return verdict(SemisimplicityAnswer::NotSemisimple, Some((m, n)));
            }
        }
    }
    verdict(SemisimplicityAnswer::NoObstructionUpToBound, None)
}

/// Zeros of `lambda_(k-1)` for `k <= bound` and the composition length of the
/// Verma module they imply within that window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VermaStructure {
    pub zeros: Vec<usize>,
    pub length: usize,
    pub bound: usize,
}

pub fn verma_structure(p: &Params, lambda: &FieldElement, bound: usize) -> Result<VermaStructure> {
    let zeros = zero_indices(p, lambda, bound);
    if p.algebra_type() == AlgebraType::D && zeros.len() > 2 {
        return Err(Error::InternalConsistency("Verma module of length greater than 3".into()));
    }
    let length = zeros.len() + 1;
    Ok(VermaStructure { zeros, length, bound })
}
