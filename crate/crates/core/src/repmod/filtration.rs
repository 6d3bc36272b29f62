use alloc::vec::Vec;

use super::FDModule;
use crate::exactfield::FieldElement;
use crate::linalg::{intersect, span_dim, Echelon, Matrix};

/// Dimensions of the down-up filtrations
/// `M_r = ker d^(r+1)`, `M^s = ker u^(s+1)` and `M(t) = sum_{r+s=t} M_r ∩ M^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    pub r: usize,
    pub s: usize,
    /// `dim M_r`.
    pub lower: usize,
    /// `dim M^s`.
    pub upper: usize,
    /// `dim (M_r ∩ M^s)`.
    pub both: usize,
    /// `dim M(t)` for `t = 0..=r+s`.
    pub graded: Vec<usize>,
    /// `u M_i ⊆ M_(i+1)`, `d M^j ⊆ M^(j+1)` and `d (M_i ∩ M^j) ⊆ M_(i-1) ∩ M^(j+1)`
    /// for all `i <= r`, `j <= s`.
    pub containments_ok: bool,
}

fn kernel_of_power(m: &Matrix, k: usize) -> Vec<Vec<FieldElement>> {
    m.pow(k).nullspace()
}

fn maps_into(g: &Matrix, from: &[Vec<FieldElement>], to: &[Vec<FieldElement>], n: usize) -> bool {
    let mut e = Echelon::new(g.field(), n);
    for v in to {
        e.insert(v);
    }
    from.iter().all(|v| e.contains(&g.apply(v)))
}

pub fn torsion_filtration(m: &FDModule, r: usize, s: usize) -> TorsionReport {
    let n = m.dim();
    let field = m.params().field();
    let top = r + s + 1;
    // lower[i] = M_i, upper[j] = M^j
    let lower: Vec<_> = (0..=top).map(|i| kernel_of_power(m.d(), i + 1)).collect();
    let upper: Vec<_> = (0..=top).map(|j| kernel_of_power(m.u(), j + 1)).collect();
    let both = |i: usize, j: usize| intersect(field, n, &lower[i], &upper[j]);

    let graded = (0..=r + s)
        .map(|t| {
            let mut gens = Vec::new();
            for i in 0..=t {
                gens.extend(both(i, t - i));
            }
            span_dim(field, n, &gens)
        })
        .collect();

    let mut ok = true;
    for i in 0..=r {
        ok &= maps_into(m.u(), &lower[i], &lower[i + 1], n);
    }
    for j in 0..=s {
        ok &= maps_into(m.d(), &upper[j], &upper[j + 1], n);
    }
    for i in 1..=r {
        for j in 0..=s {
            ok &= maps_into(m.d(), &both(i, j), &both(i - 1, j + 1), n);
        }
    }

    TorsionReport {
        r,
        s,
        lower: lower[r].len(),
        upper: upper[s].len(),
        both: both(r, s).len(),
        graded,
        containments_ok: ok,
    }
}
