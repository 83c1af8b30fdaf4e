//! Exact multivariate polynomials over the rationals.

mod complex;
mod monomial;
mod parse;
mod polynomial;
mod rational;
mod scalar;
mod variable;

pub use complex::{ComplexF, NonFiniteError};
pub use monomial::Monomial;
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, PolyError};
pub use rational::{int, rat, Rational};
pub use scalar::Scalar;
pub use variable::{Param, Variable};
