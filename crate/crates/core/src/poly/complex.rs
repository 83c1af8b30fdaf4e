use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Error)]
#[error("non-finite complex value ({re}, {im})")]
pub struct NonFiniteError {
    pub re: f64,
    pub im: f64,
}

/// Double-precision complex number that is finite at construction.
///
/// Arithmetic can still overflow; callers that care check
/// [`ComplexF::is_finite`] on results.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexF(Complex64);

impl ComplexF {
    pub fn new(re: f64, im: f64) -> Result<Self, NonFiniteError> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexF(Complex64::new(re, im)))
        } else {
            Err(NonFiniteError { re, im })
        }
    }

    pub fn real(re: f64) -> Result<Self, NonFiniteError> {
        Self::new(re, 0.0)
    }

    pub fn from_complex(z: Complex64) -> Result<Self, NonFiniteError> {
        Self::new(z.re, z.im)
    }

    pub fn from_rational(q: &Rational) -> Self {
        let v = q.to_f64().unwrap_or(f64::NAN);
        ComplexF(Complex64::new(v, 0.0))
    }

    pub const fn zero() -> Self {
        ComplexF(Complex64::new(0.0, 0.0))
    }

    pub const fn one() -> Self {
        ComplexF(Complex64::new(1.0, 0.0))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }

    pub fn inner(&self) -> Complex64 {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        ComplexF(self.0.sqrt())
    }

    pub fn powi(&self, n: i32) -> Self {
        ComplexF(self.0.powi(n))
    }
}

impl fmt::Display for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{}", self.0.re)
        } else if self.0.im < 0.0 {
            write!(f, "{}-{}i", self.0.re, -self.0.im)
        } else {
            write!(f, "{}+{}i", self.0.re, self.0.im)
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr for ComplexF {
            type Output = ComplexF;
            fn $m(self, rhs: ComplexF) -> ComplexF {
                ComplexF(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a ComplexF> for &'a ComplexF {
            type Output = ComplexF;
            fn $m(self, rhs: &'a ComplexF) -> ComplexF {
                ComplexF(self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for ComplexF {
    type Output = ComplexF;
    fn neg(self) -> ComplexF {
        ComplexF(-self.0)
    }
}
