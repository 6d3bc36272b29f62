//! Decision procedures: highest weight sequences, simple modules by dimension,
//! orbit finiteness, isomorphism and semisimplicity.

mod iso;
mod lambda;
mod orbits;
mod semisimple;

pub use iso::{
    algebra_type, are_isomorphic, rescale_transform, swap_transform, typec_invariant, IsoBranch, IsoVerdict,
    TypeCInvariant,
};
pub use lambda::{
    closed_form_constants, lambda_closed_form, lambda_seq, lemma_weight, minimal_zero, simples_of_dim, zero_indices,
    LambdaSeq, SimplesOfDim,
};
pub use orbits::{
    from_w_coordinates, orbit_finite_condition, orbit_iterate, orbit_step, to_w_coordinates, OrbitResult, Point,
};
pub use semisimple::{
    semisimplicity_verdict, verma_structure, xmn_member, SemisimplicityAnswer, SemisimplicityVerdict,
    VermaStructure,
};

pub const DEFAULT_ORBIT_BOUND: usize = 24;
pub const DEFAULT_ZERO_BOUND: usize = 64;
pub const DEFAULT_XMN_BOUND: u64 = 64;
