//! Exact computations with Noetherian down-up algebras `A(alpha, beta, gamma)`.
//!
//! The algebra has generators `d`, `u` and relations
//!
//! ```text
//! d^2 u = alpha d u d + beta u d^2 + gamma d
//! d u^2 = alpha u d u + beta u^2 d + gamma u
//! ```
//!
//! and is Noetherian exactly when `beta != 0`. Everything here is exact:
//! scalars live in a user-chosen number field and no floating point is used.
//!
//! * [`exactfield`]: number fields, polynomials over them, root finding.
//! * [`skewalgebra`]: parameters, the automorphism `sigma` of `K[x, y]`,
//!   graded normal forms and the expression parser.
//! * [`repmod`]: finite-dimensional modules as matrix pairs.
//! * [`classify`]: decision procedures (simples, orbits, isomorphism,
//!   semisimplicity).
//! * [`ext_oracle`]: Hom and Ext^1 dimensions by exact linear algebra.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod error;
pub mod exactfield;
pub mod ext_oracle;
pub mod linalg;
pub mod repmod;
pub mod skewalgebra;

pub use error::{Error, Result};
pub use exactfield::{FieldElement, NumberField, Rational};
