//! The algebra `A(alpha, beta, gamma)`: parameters, the automorphism `sigma`
//! of `R = K[x, y]`, graded normal forms and the expression parser.

mod bivar;
mod element;
mod params;
mod parser;
mod sigma;

pub use bivar::{BivarPoly, Spelling};
pub use element::{nf_add, nf_mul, nf_scale, AlgebraElement};
pub use params::{
    canonical_w_pair, power_sequence_terms, power_sequences, sigma_x_in_ideal, sigma_x_in_y_ideal, AlgebraType,
    Case, Params, WEquation, WPair,
};
pub use parser::{parse_expression, parse_polynomial, parse_scalar};
pub use sigma::{Affine, Direction, LinearSigma};

/// `sigma` applied once in the given direction.
pub fn sigma_apply(s: &LinearSigma, p: &BivarPoly, dir: Direction) -> BivarPoly {
    s.apply(p, dir)
}

/// `Params::new`, under the operation's name.
pub fn params_make(
    alpha: &crate::FieldElement,
    beta: &crate::FieldElement,
    gamma: &crate::FieldElement,
) -> crate::Result<Params> {
    Params::new(alpha, beta, gamma)
}
