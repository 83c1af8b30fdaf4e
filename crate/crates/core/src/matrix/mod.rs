//! 3x3 matrices over rationals and complex floats, word evaluation, exact
//! SL(3,Q) sampling and the special families used by the singular-locus
//! checks.

mod families;
mod mat3;
mod sample;

use thiserror::Error;

pub use families::{family_ac, family_diag, family_gl2, family_sl2, pair_rho1_rho2, rational_cbrt, AcPair, Block2};
pub use mat3::Mat3;
pub use sample::{sample_conjugator, sample_sl3q, DEFAULT_FACTORS};

use crate::poly::Scalar;
use crate::word::Word;

/// Tolerance used for unimodularity of floating matrices.
pub const FLOAT_DET_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("matrix is not unimodular (|det - 1| = {0})")]
    NotUnimodular(f64),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("2x2 block {0} does not have determinant 1")]
    BlockNotUnimodular(usize),
    #[error("2x2 block {0} is singular")]
    SingularBlock(usize),
    #[error("word has rank {0}, but only two matrices are bound")]
    RankUnsupported(u8),
    #[error("n_factors must be at least 1")]
    NoFactors,
}

/// Adjugate as inverse, after checking `det == 1` (exactly for rationals).
pub fn inverse_sl<S: Scalar>(m: &Mat3<S>) -> Result<Mat3<S>, MatrixError> {
    let d = m.det();
    if !d.approx_eq(&S::scalar_one(), FLOAT_DET_TOL) {
        return Err(MatrixError::NotUnimodular(d.minus(&S::scalar_one()).magnitude()));
    }
    Ok(m.adjugate())
}

/// A point of SL(3) x SL(3). Construction checks both determinants.
#[derive(Clone, Debug, PartialEq)]
pub struct RepPair<S> {
    m1: Mat3<S>,
    m2: Mat3<S>,
    inv1: Mat3<S>,
    inv2: Mat3<S>,
}

impl<S: Scalar> RepPair<S> {
    pub fn new(m1: Mat3<S>, m2: Mat3<S>) -> Result<Self, MatrixError> {
        let inv1 = inverse_sl(&m1)?;
        let inv2 = inverse_sl(&m2)?;
        Ok(RepPair { m1, m2, inv1, inv2 })
    }

    pub fn identity() -> Self {
        Self::new(Mat3::identity(), Mat3::identity()).expect("identity is unimodular")
    }

    pub fn m1(&self) -> &Mat3<S> {
        &self.m1
    }

    pub fn m2(&self) -> &Mat3<S> {
        &self.m2
    }

    /// `(g^-1 m1 g, g^-1 m2 g)`.
    pub fn conjugate(&self, g: &Mat3<S>) -> Result<Self, MatrixError> {
        let gi = inverse_sl(g)?;
        Self::new(&(&gi * &self.m1) * g, &(&gi * &self.m2) * g)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> Result<RepPair<T>, MatrixError> {
        RepPair::new(self.m1.map(f), self.m2.map(f))
    }

    /// Image of `w` under x1 -> m1, x2 -> m2.
    pub fn eval_word(&self, w: &Word) -> Result<Mat3<S>, MatrixError> {
        if w.rank() > 2 {
            return Err(MatrixError::RankUnsupported(w.rank()));
        }
        let mut acc = Mat3::identity();
        for l in w.letters() {
            let base = match (l.gen, l.exp > 0) {
                (1, true) => &self.m1,
                (1, false) => &self.inv1,
                (_, true) => &self.m2,
                (_, false) => &self.inv2,
            };
            for _ in 0..l.exp.unsigned_abs() {
                acc = &acc * base;
            }
        }
        Ok(acc)
    }

    pub fn trace_word(&self, w: &Word) -> Result<S, MatrixError> {
        Ok(self.eval_word(w)?.trace())
    }
}

/// Free-function form of [`RepPair::eval_word`].
pub fn eval_word<S: Scalar>(w: &Word, pair: &RepPair<S>) -> Result<Mat3<S>, MatrixError> {
    pair.eval_word(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat, ComplexF, Rational};

    #[test]
    fn inverse_sl_examples() {
        let d = Mat3::diag(int(2), int(3), rat(1, 6));
        assert_eq!(inverse_sl(&d).unwrap(), Mat3::diag(rat(1, 2), rat(1, 3), int(6)));
        assert_eq!(d.adjugate(), Mat3::diag(rat(1, 2), rat(1, 3), int(6)));
        let two: Mat3<Rational> = Mat3::scalar(int(2));
        assert!(matches!(inverse_sl(&two), Err(MatrixError::NotUnimodular(_))));
    }

    #[test]
    fn complex_unimodular_tolerance() {
        let near = Mat3::diag(ComplexF::real(1.0 + 1e-12).unwrap(), ComplexF::one(), ComplexF::one());
        assert!(inverse_sl(&near).is_ok());
        let far = Mat3::diag(ComplexF::real(1.0 + 1e-6).unwrap(), ComplexF::one(), ComplexF::one());
        assert!(inverse_sl(&far).is_err());
    }

    #[test]
    fn word_evaluation_basics() {
        let pair = sample_sl3q(7, 6).unwrap();
        assert_eq!(pair.eval_word(&Word::identity(2)).unwrap(), Mat3::identity());
        assert_eq!(pair.eval_word(&"x1 X1".parse().unwrap()).unwrap(), Mat3::identity());
        let id = RepPair::<Rational>::identity();
        assert_eq!(id.trace_word(&"x1 x2 X1 X2".parse().unwrap()).unwrap(), int(3));
        let r3 = Word::parse("x3", 3).unwrap();
        assert_eq!(pair.eval_word(&r3), Err(MatrixError::RankUnsupported(3)));
    }
}
