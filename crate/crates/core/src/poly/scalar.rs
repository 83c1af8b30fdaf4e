use std::fmt::Debug;

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ComplexF, Rational};

/// Field operations shared by exact rationals and floating complex numbers,
/// so matrices and polynomial evaluation can be written once.
pub trait Scalar: Clone + Debug + PartialEq {
    fn scalar_zero() -> Self;
    fn scalar_one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` for zero.
    fn recip(&self) -> Option<Self>;
    fn vanishes(&self) -> bool;
    /// Exact equality for rationals; `|a - b| <= tol` for floats.
    fn approx_eq(&self, o: &Self, tol: f64) -> bool;
    /// Absolute value as f64 (for residual reporting).
    fn magnitude(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = Self::scalar_one();
        for _ in 0..n {
            acc = acc.times(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn scalar_zero() -> Self {
        Zero::zero()
    }
    fn scalar_one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self))
        }
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn approx_eq(&self, o: &Self, _tol: f64) -> bool {
        self == o
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
}

impl Scalar for ComplexF {
    fn scalar_zero() -> Self {
        ComplexF::zero()
    }
    fn scalar_one() -> Self {
        ComplexF::one()
    }
    fn from_rational(q: &Rational) -> Self {
        ComplexF::from_rational(q)
    }
    fn plus(&self, o: &Self) -> Self {
        *self + *o
    }
    fn minus(&self, o: &Self) -> Self {
        *self - *o
    }
    fn times(&self, o: &Self) -> Self {
        *self * *o
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn recip(&self) -> Option<Self> {
        if self.abs() == 0.0 {
            None
        } else {
            Some(ComplexF::one() / *self)
        }
    }
    fn vanishes(&self) -> bool {
        self.abs() == 0.0
    }
    fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        (*self - *o).abs() <= tol
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}
