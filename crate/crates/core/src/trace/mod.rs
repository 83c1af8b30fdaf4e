//! Trace identities as checkable residuals, and the engine that rewrites the
//! trace of any rank-2 word as a polynomial in the nine generators.

mod catalog;
mod expr;
mod interp;
mod reduce;
mod shapes;

use thiserror::Error;

pub use catalog::{catalog, identity_residual, pol_rhs, residual_of, residual_on_pair, IdentityName, IdentityRecord, Residual};
pub use expr::{degree_bounds, pol_expression, trace_degree, MatrixExpression};
pub use interp::{
    interpolate_invariant, reduce_by_interpolation, reduce_by_interpolation_with, InterpolationConfig, DEGREE_SCHEDULE,
};
pub use reduce::{
    clear_cache, reduce_power, reduce_trace_word, reduce_with_rules, trace_expression_to_generators, trace_symbol,
    TraceExpression,
};
pub use shapes::{classify_generators, GeneratorShape, SHAPES};

use crate::linalg::LinalgError;
use crate::matrix::MatrixError;
use crate::poly::PolyError;
use crate::word::WordError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TraceError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {name} takes {expected} matrices, got {got}")]
    ArityMismatch { name: &'static str, expected: usize, got: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("reduction failed: {0}")]
    ReductionFailed(String),
    #[error("no polynomial of degree <= {0} matches the samples")]
    BasisInsufficient(u32),
    #[error("samples do not determine the coefficients")]
    RankDeficient,
    #[error("rank {0} words are not supported")]
    RankUnsupported(u8),
}
