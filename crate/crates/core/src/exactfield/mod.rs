//! Exact arithmetic in number fields `Q(t) = Q[t]/(m(t))`.

mod field;
mod kpoly;
mod ops;
mod qpoly;
mod zfactor;

pub use field::{field_arith, ArithValue, FieldElement, FieldOp, NumberField};
pub use kpoly::KPoly;
pub use ops::{geometric_sum, quadratic_roots, root_of_unity_order};
pub use qpoly::{interpolate, QPoly};
pub use zfactor::{factor_rational, factor_squarefree_integer, squarefree_decomposition};


/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"` (optional sign, decimal digits).
pub fn parse_rational(s: &str) -> Option<Rational> {
    use core::str::FromStr;
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num_bigint::BigInt::from_str(num).ok()?;
    let den = num_bigint::BigInt::from_str(den).ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}
