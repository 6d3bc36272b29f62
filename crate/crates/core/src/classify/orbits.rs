use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactfield::{root_of_unity_order, FieldElement};
use crate::skewalgebra::{canonical_w_pair, BivarPoly, Case, Direction, Params};

pub type Point = (FieldElement, FieldElement);

/// Least period of the `sigma`-orbit of the maximal ideal whose
/// `w`-coordinates are `(a1, a2)`, or `None` when the orbit is infinite.
pub fn orbit_finite_condition(p: &Params, a1: &FieldElement, a2: &FieldElement) -> Result<Option<u64>> {
    let field = p.field();
    if a1.field() != field || a2.field() != field {
        return Err(Error::FieldMismatch);
    }
    let gamma_zero = p.gamma().is_zero();
    Ok(match p.case() {
        Case::Case1 => {
            let (l1, l2) = p.roots()?;
            let mut period = 1u64;
            for (l, a) in [(l1, a1), (l2, a2)] {
                if a.is_zero() {
                    continue;
                }
                match root_of_unity_order(&l)? {
                    Some(k) => period = period.lcm(&k),
                    None => return Ok(None),
                }
            }
            Some(period)
        }
        Case::Case2 => {
            if !gamma_zero {
                None
            } else if a2.is_zero() {
                Some(1)
            } else {
                root_of_unity_order(p.eta())?
            }
        }
        Case::Case3 => {
            if !a1.is_zero() {
                None
            } else if a2.is_zero() {
                Some(1)
            } else {
                let half = p.alpha() * &field.from_int(2).inv()?;
                root_of_unity_order(&half)?
            }
        }
        Case::Case4 => (gamma_zero && a1.is_zero()).then_some(1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitResult {
    /// The points `P, sigma(P), ...` up to (excluding) the return to `P`.
    Orbit(Vec<Point>),
    NoReturnWithinBound,
}

impl OrbitResult {
    pub fn period(&self) -> Option<usize> {
        match self {
            OrbitResult::Orbit(v) => Some(v.len()),
            OrbitResult::NoReturnWithinBound => None,
        }
    }
}

/// Common zero of two affine polynomials, when unique.
fn solve_affine(f: &BivarPoly, g: &BivarPoly) -> Result<Point> {
    let bad = || Error::InternalConsistency("image ideal is not maximal".into());
    let (c1, p1, q1) = f.affine_coeffs().ok_or_else(bad)?;
    let (c2, p2, q2) = g.affine_coeffs().ok_or_else(bad)?;
    let det = &(&p1 * &q2) - &(&q1 * &p2);
    let inv = det.inv().map_err(|_| bad())?;
    let a = &(&(&-&c1 * &q2) + &(&q1 * &c2)) * &inv;
    let b = &(&(&-&p1 * &c2) + &(&c1 * &p2)) * &inv;
    Ok((a, b))
}

/// One step of ideal transport: the point of `sigma(P)` computed by applying
/// `sigma` to the generators `x - a`, `y - b` and solving for the common zero.
pub fn orbit_step(p: &Params, point: &Point) -> Result<Point> {
    let field = p.field();
    let gx = BivarPoly::x(field).sub(&BivarPoly::constant(&point.0));
    let gy = BivarPoly::y(field).sub(&BivarPoly::constant(&point.1));
    let s = p.sigma();
    solve_affine(&s.apply(&gx, Direction::Forward), &s.apply(&gy, Direction::Forward))
}

/// Iterates ideal transport from `point` until it returns or `bound` steps pass.
pub fn orbit_iterate(p: &Params, point: &Point, bound: usize) -> Result<OrbitResult> {
    let mut orbit = alloc::vec![point.clone()];
    let mut cur = point.clone();
    for _ in 0..bound {
        cur = orbit_step(p, &cur)?;
        if &cur == point {
            return Ok(OrbitResult::Orbit(orbit));
        }
        orbit.push(cur.clone());
    }
    Ok(OrbitResult::NoReturnWithinBound)
}

/// `w`-coordinates of a point.
pub fn to_w_coordinates(p: &Params, point: &Point) -> Result<Point> {
    Ok(canonical_w_pair(p)?.coordinates(&point.0, &point.1))
}

/// The point with the given `w`-coordinates.
pub fn from_w_coordinates(p: &Params, coords: &Point) -> Result<Point> {
    canonical_w_pair(p)?.point_from_coordinates(&coords.0, &coords.1)
}
