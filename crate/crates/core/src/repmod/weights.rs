use alloc::vec::Vec;

use super::FDModule;
use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, KPoly};
use crate::linalg::{Echelon, Matrix};

/// A simultaneous eigenspace of `du` and `ud`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    /// Eigenvalue of `du` (the `y`-coordinate).
    pub du: FieldElement,
    /// Eigenvalue of `ud` (the `x`-coordinate).
    pub ud: FieldElement,
    pub multiplicity: usize,
    /// Basis of the joint eigenspace.
    pub vectors: Vec<Vec<FieldElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub weights: Vec<Weight>,
    /// Whether the weight spaces span the module.
    pub is_weight_module: bool,
}

impl WeightData {
    /// `(du, ud)` pairs repeated by multiplicity.
    pub fn pairs(&self) -> Vec<(FieldElement, FieldElement)> {
        self.weights
            .iter()
            .flat_map(|w| core::iter::repeat((w.du.clone(), w.ud.clone())).take(w.multiplicity))
            .collect()
    }
}

fn split_roots(poly: &KPoly) -> Result<Vec<FieldElement>> {
    let (roots, cofactor) = poly.roots();
    if cofactor.degree().unwrap_or(0) > 0 {
        return Err(Error::EigenvaluesNotInField { factor: cofactor.monic() });
    }
    Ok(roots)
}

pub fn weight_decomposition(m: &FDModule) -> Result<WeightData> {
    let n = m.dim();
    let field = m.params().field();
    let du = m.d().mul(m.u());
    let ud = m.u().mul(m.d());
    let du_roots = split_roots(&du.charpoly())?;
    let ud_roots = split_roots(&ud.charpoly())?;
    let id = Matrix::identity(field, n);
    let mut weights = Vec::new();
    let mut total = 0;
    for a in &du_roots {
        for b in &ud_roots {
            let ma = du.sub(&id.scale(a));
            let mb = ud.sub(&id.scale(b));
            let stacked = Matrix::from_fn(field, 2 * n, n, |r, c| {
                if r < n {
                    ma.get(r, c).clone()
                } else {
                    mb.get(r - n, c).clone()
                }
            });
            let kernel = stacked.nullspace();
            if kernel.is_empty() {
                continue;
            }
            let mut e = Echelon::new(field, n);
            for v in &kernel {
                e.insert(v);
            }
            total += kernel.len();
            weights.push(Weight { du: a.clone(), ud: b.clone(), multiplicity: kernel.len(), vectors: e.basis() });
        }
    }
    // order by the first coordinate each weight space reaches
    weights.sort_by_key(|w| {
        w.vectors.iter().filter_map(|v| v.iter().position(|x| !x.is_zero())).min().unwrap_or(usize::MAX)
    });
    Ok(WeightData { weights, is_weight_module: total == n })
}
