use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactfield::{geometric_sum, FieldElement};
use crate::repmod::{is_simple, verma_quotient};
use crate::skewalgebra::Params;

/// The sequence `lambda_n = alpha lambda_(n-1) + beta lambda_(n-2) + gamma`
/// with `lambda_(-1) = 0`, `lambda_0 = lambda`, together with its affine
/// decomposition `lambda_n = P_n lambda + Q_n`.
#[derive(Debug, Clone)]
pub struct LambdaSeq {
    params: Params,
    lambda: FieldElement,
    values: Vec<FieldElement>,
    p: Vec<FieldElement>,
    q: Vec<FieldElement>,
}

impl LambdaSeq {
    pub fn new(params: &Params, lambda: &FieldElement) -> Self {
        let field = params.field();
        LambdaSeq {
            params: params.clone(),
            lambda: lambda.clone(),
            values: alloc::vec![lambda.clone()],
            p: alloc::vec![field.one()],
            q: alloc::vec![field.zero()],
        }
    }

    fn step(&self, prev: &FieldElement, prev2: &FieldElement, constant: bool) -> FieldElement {
        let base = &(self.params.alpha() * prev) + &(self.params.beta() * prev2);
        if constant {
            &base + self.params.gamma()
        } else {
            base
        }
    }

    pub fn extend_to(&mut self, n: usize) {
        let zero = self.params.field().zero();
        while self.values.len() <= n {
            let k = self.values.len();
            // entry k - 2, with index -1 holding 0
            let back2 = |v: &Vec<FieldElement>| if k >= 2 { v[k - 2].clone() } else { zero.clone() };
            let v = self.step(&self.values[k - 1], &back2(&self.values), true);
            let p = self.step(&self.p[k - 1], &back2(&self.p), false);
            let q = self.step(&self.q[k - 1], &back2(&self.q), true);
            self.values.push(v);
            self.p.push(p);
            self.q.push(q);
        }
    }

    /// `lambda_n`.
    pub fn value(&mut self, n: usize) -> FieldElement {
        self.extend_to(n);
        self.values[n].clone()
    }

    /// `(P_n, Q_n)`.
    pub fn affine(&mut self, n: usize) -> (FieldElement, FieldElement) {
        self.extend_to(n);
        (self.p[n].clone(), self.q[n].clone())
    }

    pub fn values(&mut self, n: usize) -> Vec<FieldElement> {
        self.extend_to(n);
        self.values[..=n].to_vec()
    }

    pub fn lambda(&self) -> &FieldElement {
        &self.lambda
    }
}

/// `lambda_0, ..., lambda_n`.
pub fn lambda_seq(p: &Params, lambda: &FieldElement, n: usize) -> Vec<FieldElement> {
    let mut s = LambdaSeq::new(p, lambda);
    let vals = s.values(n);
    debug_assert!((0..=n).all(|k| {
        let (pk, qk) = s.affine(k);
        &(&pk * lambda) + &qk == vals[k]
    }));
    vals
}

/// The constants `(c1, c2)` of `lambda_n = c1 + c2 eta^n + gamma n / (1 - eta)`,
/// available when `alpha + beta = 1` and `eta != 1`.
pub fn closed_form_constants(p: &Params, lambda: &FieldElement) -> Option<(FieldElement, FieldElement)> {
    let one = p.field().one();
    let eta = p.eta();
    if !(p.alpha() + p.beta()).is_one() || eta.is_one() {
        return None;
    }
    let inv_em1 = (eta - &one).inv().ok()?;
    let g = p.gamma() * &(&one - eta).inv().ok()?;
    let c1 = &inv_em1 * &(&(&-lambda - p.gamma()) + &g);
    let c2 = &inv_em1 * &(&(&(eta * lambda) + p.gamma()) - &g);
    Some((c1, c2))
}

/// `lambda_n` from the closed form, when it applies.
pub fn lambda_closed_form(p: &Params, lambda: &FieldElement, n: u64) -> Option<FieldElement> {
    let (c1, c2) = closed_form_constants(p, lambda)?;
    let one = p.field().one();
    let eta = p.eta();
    let lin = &(p.gamma() * &p.field().from_int(n as i64)) * &(&one - eta).inv().ok()?;
    Some(&(&c1 + &(&c2 * &eta.pow(n))) + &lin)
}

/// All `k` in `1..=bound` with `lambda_(k-1) = 0`.
pub fn zero_indices(p: &Params, lambda: &FieldElement, bound: usize) -> Vec<usize> {
    if bound == 0 {
        return Vec::new();
    }
    let vals = lambda_seq(p, lambda, bound - 1);
    (1..=bound).filter(|&k| vals[k - 1].is_zero()).collect()
}

/// Least `n` in `1..=bound` with `lambda_(n-1) = 0`: the dimension of `L(lambda)`.
pub fn minimal_zero(p: &Params, lambda: &FieldElement, bound: usize) -> Option<usize> {
    let mut s = LambdaSeq::new(p, lambda);
    (1..=bound).find(|&k| s.value(k - 1).is_zero())
}

/// Highest weights of the simple modules of a given dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplesOfDim {
    /// Exactly these highest weights.
    Finite(Vec<FieldElement>),
    /// Every highest weight except those listed.
    AllExcept(Vec<FieldElement>),
}

impl SimplesOfDim {
    pub fn finite(&self) -> Option<&[FieldElement]> {
        match self {
            SimplesOfDim::Finite(v) => Some(v),
            SimplesOfDim::AllExcept(_) => None,
        }
    }
}

/// Solves `P_(n-1) lambda + Q_(n-1) = 0` and keeps the solutions whose
/// first zero is at index `n - 1`; each survivor is certified simple.
pub fn simples_of_dim(p: &Params, n: usize) -> Result<SimplesOfDim> {
    if n == 0 {
        return Err(Error::DimensionMismatch("dimension must be positive".into()));
    }
    let field = p.field();
    let mut s = LambdaSeq::new(p, &field.zero());
    let (pn, qn) = s.affine(n - 1);
    if !pn.is_zero() {
        let lambda = -&(&qn * &pn.inv()?);
        if minimal_zero(p, &lambda, n) != Some(n) {
            return Ok(SimplesOfDim::Finite(Vec::new()));
        }
        let m = verma_quotient(p, &lambda, n)?;
        if !is_simple(&m) {
            return Err(Error::InternalConsistency("highest weight quotient at its first zero is not simple".into()));
        }
        return Ok(SimplesOfDim::Finite(alloc::vec![lambda]));
    }
    if !qn.is_zero() {
        return Ok(SimplesOfDim::Finite(Vec::new()));
    }
    let mut excluded = Vec::new();
    for k in 0..n - 1 {
        let (pk, qk) = s.affine(k);
        if pk.is_zero() {
            if qk.is_zero() {
                return Ok(SimplesOfDim::Finite(Vec::new()));
            }
            continue;
        }
        let bad = -&(&qk * &pk.inv()?);
        if !excluded.contains(&bad) {
            excluded.push(bad);
        }
    }
    excluded.sort();
    Ok(SimplesOfDim::AllExcept(excluded))
}

/// The value of `lambda` singled out by `lambda (eta - 1) = -gamma (1 - n / (1 + ... + eta^(n-1)))`,
/// when the geometric sum is nonzero and `eta != 1`.
pub fn lemma_weight(p: &Params, n: u64) -> Option<FieldElement> {
    let one = p.field().one();
    let eta = p.eta();
    let sum = geometric_sum(eta, n);
    let ratio = &p.field().from_int(n as i64) * &sum.inv().ok()?;
    let rhs = -&(p.gamma() * &(&one - &ratio));
    Some(&rhs * &(eta - &one).inv().ok()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::NumberField;

    fn ints(v: &[i64]) -> Vec<FieldElement> {
        let f = NumberField::rationals();
        v.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn sequences() {
        let f = NumberField::rationals();
        let p = Params::from_ints(2, -1, 1).unwrap();
        assert_eq!(lambda_seq(&p, &f.zero(), 4), ints(&[0, 1, 3, 6, 10]));
        let p = Params::from_ints(0, 1, 1).unwrap();
        assert_eq!(lambda_seq(&p, &f.zero(), 5), ints(&[0, 1, 1, 2, 2, 3]));
        let p = Params::from_ints(-1, 2, 1).unwrap();
        assert_eq!(lambda_seq(&p, &f.zero(), 5), ints(&[0, 1, 0, 3, -2, 9]));
    }

    #[test]
    fn closed_form_agrees() {
        let f = NumberField::rationals();
        let p = Params::from_ints(-1, 2, 1).unwrap();
        let lam = f.from_int(7);
        let vals = lambda_seq(&p, &lam, 20);
        for (n, v) in vals.iter().enumerate() {
            assert_eq!(&lambda_closed_form(&p, &lam, n as u64).unwrap(), v);
        }
        assert!(lambda_closed_form(&Params::from_ints(2, -1, 1).unwrap(), &lam, 3).is_none());
    }

    #[test]
    fn simples_examples() {
        let p = Params::from_ints(0, 1, 1).unwrap();
        assert_eq!(simples_of_dim(&p, 2).unwrap(), SimplesOfDim::Finite(Vec::new()));
        assert_eq!(simples_of_dim(&p, 3).unwrap(), SimplesOfDim::Finite(ints(&[-1])));
        let p = Params::from_ints(2, -1, 1).unwrap();
        assert_eq!(simples_of_dim(&p, 3).unwrap(), SimplesOfDim::Finite(ints(&[-1])));
        let k = NumberField::cyclotomic3();
        let w = k.generator();
        let p = Params::a_eta(&w, &k.one()).unwrap();
        assert_eq!(simples_of_dim(&p, 3).unwrap(), SimplesOfDim::Finite(Vec::new()));
        assert_eq!(simples_of_dim(&p, 2).unwrap().finite().unwrap().len(), 1);
    }

    #[test]
    fn generic_case() {
        // lambda_n alternates lambda, 0, lambda, 0, ...
        let p = Params::from_ints(0, 1, 0).unwrap();
        let f = p.field();
        assert_eq!(simples_of_dim(&p, 2).unwrap(), SimplesOfDim::AllExcept(alloc::vec![f.zero()]));
        assert_eq!(simples_of_dim(&p, 1).unwrap(), SimplesOfDim::Finite(alloc::vec![f.zero()]));
        assert_eq!(simples_of_dim(&p, 3).unwrap(), SimplesOfDim::Finite(Vec::new()));
    }

    #[test]
    fn zeros() {
        let f = NumberField::rationals();
        let p = Params::from_ints(-1, 2, 1).unwrap();
        assert_eq!(zero_indices(&p, &f.zero(), 16), [1, 3]);
        let p = Params::from_ints(2, -1, 1).unwrap();
        assert_eq!(zero_indices(&p, &f.from_int(-1), 16), [3]);
        assert_eq!(minimal_zero(&p, &f.from_int(-1), 16), Some(3));
    }
}
