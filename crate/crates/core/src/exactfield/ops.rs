use alloc::vec;

use super::{FieldElement, KPoly};
use crate::error::{Error, Result};

pub(crate) fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Least `N >= 1` with `a^N = 1`, or `None` when `a` is not a root of unity.
///
/// A primitive `N`-th root of unity generates a subfield of degree `phi(N)`,
/// so only `N` with `phi(N) <= deg` can occur; since `phi(N) >= sqrt(N/2)`
/// the search stops at `2 deg^2`.
pub fn root_of_unity_order(a: &FieldElement) -> Result<Option<u64>> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let deg = a.field().degree() as u64;
    let limit = (2 * deg * deg).max(2);
    let mut power = a.clone();
    for n in 1..=limit {
        if euler_phi(n) <= deg && power.is_one() {
            return Ok(Some(n));
        }
        power = &power * a;
    }
    Ok(None)
}

/// `1 + eta + ... + eta^(n-1)`, summed directly.
pub fn geometric_sum(eta: &FieldElement, n: u64) -> FieldElement {
    let field = eta.field();
    let mut acc = field.zero();
    let mut term = field.one();
    for _ in 0..n {
        acc = &acc + &term;
        term = &term * eta;
    }
    acc
}

/// Both roots of `f(l) = l^2 - alpha l - beta` in the ambient field, larger
/// first in the canonical element order; a double root is returned twice.
pub fn quadratic_roots(alpha: &FieldElement, beta: &FieldElement) -> Result<(FieldElement, FieldElement)> {
    alpha.check_field(beta)?;
    let field = alpha.field();
    let f = KPoly::new(field, vec![-beta, -alpha, field.one()]);
    let (roots, _) = f.roots();
    match roots.len() {
        2 => Ok((roots[1].clone(), roots[0].clone())),
        1 => {
            let r = roots[0].clone();
            if f.multiplicity(&r) == 2 {
                Ok((r.clone(), r))
            } else {
                Err(Error::InternalConsistency("quadratic with a single simple root".into()))
            }
        }
        _ => Err(Error::FieldNotSplit { poly: f }),
    }
}
