use super::BivarPoly;
use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, NumberField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Affine form `c0 + cx x + cy y`, the image of `span{1, x, y}` under `sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub c0: FieldElement,
    pub cx: FieldElement,
    pub cy: FieldElement,
}

impl Affine {
    pub fn x(field: &NumberField) -> Self {
        Affine { c0: field.zero(), cx: field.one(), cy: field.zero() }
    }

    pub fn y(field: &NumberField) -> Self {
        Affine { c0: field.zero(), cx: field.zero(), cy: field.one() }
    }

    pub fn to_poly(&self) -> BivarPoly {
        BivarPoly::affine(&self.c0, &self.cx, &self.cy)
    }

    pub fn eval(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        &(&self.c0 + &(&self.cx * a)) + &(&self.cy * b)
    }
}

/// The automorphism of `K[x, y]` with `x -> y`, `y -> alpha y + beta x + gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSigma {
    alpha: FieldElement,
    beta: FieldElement,
    gamma: FieldElement,
    beta_inv: FieldElement,
}

impl LinearSigma {
    pub fn new(alpha: &FieldElement, beta: &FieldElement, gamma: &FieldElement) -> Result<Self> {
        alpha.check_field(beta)?;
        alpha.check_field(gamma)?;
        let beta_inv = beta.inv().map_err(|_| Error::BetaZero)?;
        Ok(LinearSigma { alpha: alpha.clone(), beta: beta.clone(), gamma: gamma.clone(), beta_inv })
    }

    pub fn field(&self) -> &NumberField {
        self.alpha.field()
    }

    /// Images of `x` and `y` in the given direction.
    pub fn generator_images(&self, dir: Direction) -> (Affine, Affine) {
        let field = self.field();
        match dir {
            Direction::Forward => (
                Affine::y(field),
                Affine { c0: self.gamma.clone(), cx: self.beta.clone(), cy: self.alpha.clone() },
            ),
            Direction::Inverse => (
                Affine {
                    c0: -&(&self.gamma * &self.beta_inv),
                    cx: -&(&self.alpha * &self.beta_inv),
                    cy: self.beta_inv.clone(),
                },
                Affine::x(field),
            ),
        }
    }

    pub fn apply(&self, p: &BivarPoly, dir: Direction) -> BivarPoly {
        let (ix, iy) = self.generator_images(dir);
        p.compose(&ix.to_poly(), &iy.to_poly())
    }

    /// `sigma^k(p)` for any integer `k`.
    pub fn apply_power(&self, p: &BivarPoly, k: i64) -> BivarPoly {
        if k == 0 || p.is_constant() {
            return p.clone();
        }
        let (ix, iy) = self.affine_power(k);
        p.compose(&ix.to_poly(), &iy.to_poly())
    }

    /// Applies `sigma` (or its inverse) to an affine form.
    pub fn apply_affine(&self, a: &Affine, dir: Direction) -> Affine {
        let (ix, iy) = self.generator_images(dir);
        Affine {
            c0: &(&a.c0 + &(&a.cx * &ix.c0)) + &(&a.cy * &iy.c0),
            cx: &(&a.cx * &ix.cx) + &(&a.cy * &iy.cx),
            cy: &(&a.cx * &ix.cy) + &(&a.cy * &iy.cy),
        }
    }

    /// `(sigma^k(x), sigma^k(y))` as affine forms.
    pub fn affine_power(&self, k: i64) -> (Affine, Affine) {
        let field = self.field();
        let dir = if k >= 0 { Direction::Forward } else { Direction::Inverse };
        let mut ax = Affine::x(field);
        let mut ay = Affine::y(field);
        for _ in 0..k.unsigned_abs() {
            ax = self.apply_affine(&ax, dir);
            ay = self.apply_affine(&ay, dir);
        }
        (ax, ay)
    }

    /// `sigma^k(x)` as an affine form.
    pub fn x_power(&self, k: i64) -> Affine {
        self.affine_power(k).0
    }

    /// Point of `sigma(P)` for the maximal ideal `P = (x - a, y - b)`.
    pub fn ideal_point_image(&self, a: &FieldElement, b: &FieldElement) -> (FieldElement, FieldElement) {
        let na = &(&(b - &(&self.alpha * a)) - &self.gamma) * &self.beta_inv;
        (na, a.clone())
    }

    /// Point of `sigma^-1(P)`.
    pub fn ideal_point_preimage(&self, a: &FieldElement, b: &FieldElement) -> (FieldElement, FieldElement) {
        let nb = &(&(&self.alpha * b) + &(&self.beta * a)) + &self.gamma;
        (b.clone(), nb)
    }
}
