use alloc::string::String;

use crate::exactfield::{KPoly, QPoly};

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("minimal polynomial must be nonempty with leading coefficient 1")]
    NotMonic,
    #[error("minimal polynomial is reducible over Q; factor {factor}")]
    Reducible { factor: QPoly },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("field does not split {poly}; adjoin a root to continue")]
    FieldNotSplit { poly: KPoly },
    #[error("beta must be nonzero (the algebra is Noetherian only for beta != 0)")]
    BetaZero,
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("operands belong to algebras with different parameters")]
    ParamsMismatch,
    #[error("lambda_{index} = {value} is nonzero, so span{{v_j | j > {index}}} is not a submodule")]
    NotSubmoduleBoundary { index: usize, value: String },
    #[error("no zero of the lambda sequence within bound {bound}")]
    NoZeroWithinBound { bound: usize },
    #[error("constructed module failed the simplicity check")]
    NotSimple,
    #[error("not a sigma-orbit: {reason}")]
    NotAnOrbit { reason: String },
    #[error("matrices violate the defining relations")]
    RelationFailure,
    #[error("eigenvalues do not lie in the field; unsplit factor {factor}")]
    EigenvaluesNotInField { factor: KPoly },
    #[error("parameters are not of type (c)")]
    NotTypeC,
    #[error("parameters are not of type (d)")]
    NotTypeD,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
