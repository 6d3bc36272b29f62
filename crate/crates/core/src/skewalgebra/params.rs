use alloc::vec::Vec;
use core::fmt;

use super::{Affine, BivarPoly, Direction, LinearSigma};
use crate::error::{Error, Result};
use crate::exactfield::{quadratic_roots, FieldElement, KPoly, NumberField};

/// Jordan type of `sigma` on `span{1, x, y}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    /// `alpha^2 + 4 beta != 0`, `alpha + beta != 1`.
    Case1,
    /// `alpha^2 + 4 beta != 0`, `alpha + beta = 1`.
    Case2,
    /// `alpha^2 + 4 beta = 0`, `alpha + beta != 1`.
    Case3,
    /// `alpha^2 + 4 beta = 0`, `alpha + beta = 1`.
    Case4,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            Case::Case1 => 1,
            Case::Case2 => 2,
            Case::Case3 => 3,
            Case::Case4 => 4,
        };
        write!(f, "Case{n}")
    }
}

/// The four isomorphism-relevant families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraType {
    /// `gamma = 0`, `alpha + beta = 1`.
    A,
    /// `gamma = 0`, `alpha + beta != 1`.
    B,
    /// `gamma != 0`, `alpha + beta != 1`.
    C,
    /// `gamma != 0`, `alpha + beta = 1`.
    D,
}

impl AlgebraType {
    pub fn letter(self) -> char {
        match self {
            AlgebraType::A => 'a',
            AlgebraType::B => 'b',
            AlgebraType::C => 'c',
            AlgebraType::D => 'd',
        }
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Parameters `(alpha, beta, gamma)` of a Noetherian down-up algebra with
/// their derived data.
#[derive(Clone)]
pub struct Params {
    alpha: FieldElement,
    beta: FieldElement,
    gamma: FieldElement,
    eta: FieldElement,
    roots: core::result::Result<(FieldElement, FieldElement), KPoly>,
    case: Case,
    kind: AlgebraType,
    sigma: LinearSigma,
}

impl Params {
    pub fn new(alpha: &FieldElement, beta: &FieldElement, gamma: &FieldElement) -> Result<Self> {
        alpha.check_field(beta)?;
        alpha.check_field(gamma)?;
        if beta.is_zero() {
            return Err(Error::BetaZero);
        }
        let field = alpha.field();
        let four = field.from_int(4);
        let disc_zero = (&(alpha * alpha) + &(&four * beta)).is_zero();
        let sum_one = (alpha + beta).is_one();
        let case = match (disc_zero, sum_one) {
            (false, false) => Case::Case1,
            (false, true) => Case::Case2,
            (true, false) => Case::Case3,
            (true, true) => Case::Case4,
        };
        let kind = match (gamma.is_zero(), sum_one) {
            (true, true) => AlgebraType::A,
            (true, false) => AlgebraType::B,
            (false, false) => AlgebraType::C,
            (false, true) => AlgebraType::D,
        };
        let roots = match quadratic_roots(alpha, beta) {
            Ok(r) => Ok(r),
            Err(Error::FieldNotSplit { poly }) => Err(poly),
            Err(e) => return Err(e),
        };
        Ok(Params {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
            eta: -beta,
            roots,
            case,
            kind,
            sigma: LinearSigma::new(alpha, beta, gamma)?,
        })
    }

    /// Convenience constructor over `Q` from integers.
    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Result<Self> {
        let q = NumberField::rationals();
        Self::new(&q.from_int(alpha), &q.from_int(beta), &q.from_int(gamma))
    }

    /// The family `A_eta = A(1 + eta, -eta, gamma)`.
    pub fn a_eta(eta: &FieldElement, gamma: &FieldElement) -> Result<Self> {
        let one = eta.field().one();
        Self::new(&(&one + eta), &-eta, gamma)
    }

    pub fn field(&self) -> &NumberField {
        self.alpha.field()
    }

    pub fn alpha(&self) -> &FieldElement {
        &self.alpha
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    pub fn gamma(&self) -> &FieldElement {
        &self.gamma
    }

    pub fn eta(&self) -> &FieldElement {
        &self.eta
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn algebra_type(&self) -> AlgebraType {
        self.kind
    }

    pub fn sigma(&self) -> &LinearSigma {
        &self.sigma
    }

    /// Roots of `l^2 - alpha l - beta`.
    pub fn roots(&self) -> Result<(FieldElement, FieldElement)> {
        self.roots.clone().map_err(|poly| Error::FieldNotSplit { poly })
    }
}

impl PartialEq for Params {
    fn eq(&self, other: &Self) -> bool {
        self.alpha.field() == other.alpha.field()
            && self.alpha == other.alpha
            && self.beta == other.beta
            && self.gamma == other.gamma
    }
}

impl Eq for Params {}

impl fmt::Debug for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `sigma(w) = scale * w + (w1 if plus_w1) + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WEquation {
    pub scale: FieldElement,
    pub plus_w1: bool,
    pub constant: FieldElement,
}

/// The normal coordinates `w1, w2` of `span{1, x, y}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPair {
    pub case: Case,
    pub w1: BivarPoly,
    pub w2: BivarPoly,
    pub eq1: WEquation,
    pub eq2: WEquation,
}

impl WPair {
    /// Checks both equations by applying `sigma`.
    pub fn verify(&self, sigma: &LinearSigma) -> bool {
        let check = |w: &BivarPoly, eq: &WEquation| {
            let mut rhs = w.scale(&eq.scale).add(&BivarPoly::constant(&eq.constant));
            if eq.plus_w1 {
                rhs = rhs.add(&self.w1);
            }
            sigma.apply(w, Direction::Forward) == rhs
        };
        check(&self.w1, &self.eq1) && check(&self.w2, &self.eq2)
    }

    /// Values `(w1(a, b), w2(a, b))`.
    pub fn coordinates(&self, a: &FieldElement, b: &FieldElement) -> (FieldElement, FieldElement) {
        (self.w1.eval(a, b), self.w2.eval(a, b))
    }

    /// The point `(a, b)` with the given `w`-coordinates.
    pub fn point_from_coordinates(&self, c1: &FieldElement, c2: &FieldElement) -> Result<(FieldElement, FieldElement)> {
        let (a1, p1, q1) = self.w1.affine_coeffs().ok_or_else(|| Error::InternalConsistency("w1 not affine".into()))?;
        let (a2, p2, q2) = self.w2.affine_coeffs().ok_or_else(|| Error::InternalConsistency("w2 not affine".into()))?;
        // p1 a + q1 b = c1 - a1, p2 a + q2 b = c2 - a2
        let det = &(&p1 * &q2) - &(&q1 * &p2);
        let det_inv = det.inv().map_err(|_| Error::InternalConsistency("w coordinates are dependent".into()))?;
        let r1 = c1 - &a1;
        let r2 = c2 - &a2;
        let a = &(&(&r1 * &q2) - &(&q1 * &r2)) * &det_inv;
        let b = &(&(&p1 * &r2) - &(&r1 * &p2)) * &det_inv;
        Ok((a, b))
    }
}

/// The case-specific pair `w1, w2` with its `sigma`-equations, verified.
pub fn canonical_w_pair(p: &Params) -> Result<WPair> {
    let field = p.field();
    let (alpha, beta, gamma) = (p.alpha(), p.beta(), p.gamma());
    let zero = field.zero();
    let one = field.one();
    let two = field.from_int(2);
    let eq = |scale: &FieldElement, plus_w1: bool, constant: &FieldElement| WEquation {
        scale: scale.clone(),
        plus_w1,
        constant: constant.clone(),
    };
    let pair = match p.case() {
        Case::Case1 => {
            let (l1, l2) = p.roots()?;
            let w = |l: &FieldElement| {
                let lm1 = l - &one;
                BivarPoly::affine(&(gamma * l), &(beta * &lm1), &(l * &lm1))
            };
            WPair { case: Case::Case1, w1: w(&l1), w2: w(&l2), eq1: eq(&l1, false, &zero), eq2: eq(&l2, false, &zero) }
        }
        Case::Case2 => {
            let c = gamma * &(alpha - &two).inv()?;
            WPair {
                case: Case::Case2,
                w1: BivarPoly::affine(&zero, beta, &one),
                w2: BivarPoly::affine(&c, &-&one, &one),
                eq1: eq(&one, false, gamma),
                eq2: eq(p.eta(), false, &zero),
            }
        }
        Case::Case3 => {
            let half_alpha = alpha * &two.inv()?;
            WPair {
                case: Case::Case3,
                w1: BivarPoly::affine(&(&two * gamma), &(&(&two * beta) + alpha), &(alpha - &two)),
                w2: BivarPoly::affine(&zero, &-&two, &two),
                eq1: eq(&half_alpha, false, &zero),
                eq2: eq(&half_alpha, true, &zero),
            }
        }
        Case::Case4 => WPair {
            case: Case::Case4,
            w1: BivarPoly::affine(gamma, &-&one, &one),
            w2: BivarPoly::y(field),
            eq1: eq(&one, false, gamma),
            eq2: eq(&one, true, &zero),
        },
    };
    if !pair.verify(p.sigma()) {
        return Err(Error::InternalConsistency("w pair fails its sigma equations".into()));
    }
    Ok(pair)
}

/// `x_n = sigma(x_{n-1} x)` and `y_n = x sigma^-1(y_{n-1})` for
/// `0..=n`, so that `d^n u^n = x_n` and `u^n d^n = y_n`.
pub fn power_sequences(p: &Params, n: usize) -> Result<(Vec<BivarPoly>, Vec<BivarPoly>)> {
    let field = p.field();
    let x = BivarPoly::x(field);
    let mut xs = Vec::with_capacity(n + 1);
    let mut ys = Vec::with_capacity(n + 1);
    xs.push(BivarPoly::one(field));
    ys.push(BivarPoly::one(field));
    for k in 1..=n {
        xs.push(p.sigma().apply(&xs[k - 1].mul(&x), Direction::Forward));
        ys.push(x.mul(&p.sigma().apply(&ys[k - 1], Direction::Inverse)));
    }
    // product formulas
    let mut px = BivarPoly::one(field);
    let mut py = BivarPoly::one(field);
    for k in 1..=n {
        px = px.mul(&p.sigma().apply_power(&x, k as i64));
        py = py.mul(&p.sigma().apply_power(&x, -(k as i64 - 1)));
        if px != xs[k] || py != ys[k] {
            return Err(Error::InternalConsistency("power sequence recursion disagrees with products".into()));
        }
    }
    Ok((xs, ys))
}

/// `x_n` and `y_n` alone.
pub fn power_sequence_terms(p: &Params, n: usize) -> Result<(BivarPoly, BivarPoly)> {
    let (mut xs, mut ys) = power_sequences(p, n)?;
    Ok((xs.pop().unwrap(), ys.pop().unwrap()))
}

/// Whether `sigma^n(x)` lies in the ideal `(x)`.
pub fn sigma_x_in_ideal(p: &Params, n: i64) -> bool {
    let Affine { c0, cy, .. } = p.sigma().x_power(n);
    c0.is_zero() && cy.is_zero()
}

/// Whether `sigma^n(x)` lies in the ideal `(y)`.
pub fn sigma_x_in_y_ideal(p: &Params, n: i64) -> bool {
    let Affine { c0, cx, .. } = p.sigma().x_power(n);
    c0.is_zero() && cx.is_zero()
}
