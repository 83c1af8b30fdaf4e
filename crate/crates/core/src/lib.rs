//! Exact trace identities, reductions and Poisson structure on the SL(3,C)
//! character variety of the free group of rank 2.

pub mod harness;
pub mod linalg;
pub mod matrix;
pub mod poisson;
pub mod poly;
pub mod ring;
pub mod rp2;
pub mod trace;
pub mod word;

pub use poly::{int, parse_polynomial, rat, ComplexF, Monomial, Param, PolyError, Polynomial, Rational, Scalar, Variable};
pub use ring::{normal_form, pi_map, poly_p, poly_q, sextic, DihedralElement, GeneratorPoint, RingError};
pub use trace::{reduce_trace_word, TraceError};
pub use word::{Letter, Word, WordError};
