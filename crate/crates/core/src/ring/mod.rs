//! The explicit presentation of the coordinate ring: P, Q, the sextic, the
//! map Π, the Jacobian ideal, the D4 symmetry and the Z3 x Z3 grading.

mod dihedral;
mod grading;
mod jacobian;
mod lambda;
mod partials;
mod pi;
mod relations;

use thiserror::Error;

pub use dihedral::{apply_dihedral, dihedral_group, symmetrizer, DihedralElement, PRINTED_CAYLEY};
pub use grading::{generator_bidegree, grading_weight, is_homogeneous, monomial_bidegree};
pub use jacobian::{ac_family_expected, jacobian_generator, jacobian_generators, sl2_substitute, JACOBIAN_LABELS};
pub use lambda::{
    lambda_basis, lambda_det, lambda_factorization, lambda_matrix, lambda_symbolic, LambdaFactorization, LAMBDA_BASIS,
};
pub use partials::{partials_p, partials_q};
pub use pi::{generator_word, pi_map, GeneratorPoint, GENERATOR_INDICES};
pub use relations::{branch_discriminant, normal_form, poly_p, poly_q, sextic, small_p, small_q};

use crate::matrix::MatrixError;
use crate::poly::PolyError;
use crate::trace::TraceError;
use crate::word::WordError;

/// `P^2 - 4Q`.
pub fn branch_locus() -> &'static crate::poly::Polynomial {
    branch_discriminant()
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RingError {
    #[error("variable {0} is outside the subring generated by t(±1..±4)")]
    VariableOutOfSubring(String),
    #[error("unknown dihedral element {0:?}")]
    UnknownDihedral(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}
