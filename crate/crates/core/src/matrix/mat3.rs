use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Scalar;

/// 3x3 matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<S> {
    m: [[S; 3]; 3],
}

impl<S: Scalar> Mat3<S> {
    pub fn from_rows(m: [[S; 3]; 3]) -> Self {
        Mat3 { m }
    }

    pub fn zero() -> Self {
        Mat3::from_rows(std::array::from_fn(|_| std::array::from_fn(|_| S::scalar_zero())))
    }

    pub fn identity() -> Self {
        Self::scalar(S::scalar_one())
    }

    pub fn scalar(c: S) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            out.m[i][i] = c.clone();
        }
        out
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        let mut out = Self::zero();
        out.m[0][0] = a;
        out.m[1][1] = b;
        out.m[2][2] = c;
        out
    }

    /// Elementary transvection `I + q e_ij` (i != j).
    pub fn transvection(i: usize, j: usize, q: S) -> Self {
        debug_assert!(i != j);
        let mut out = Self::identity();
        out.m[i][j] = q;
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.m[i][j]
    }

    pub fn rows(&self) -> &[[S; 3]; 3] {
        &self.m
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat3<T> {
        Mat3::from_rows(std::array::from_fn(|i| std::array::from_fn(|j| f(&self.m[i][j]))))
    }

    pub fn trace(&self) -> S {
        self.m[0][0].plus(&self.m[1][1]).plus(&self.m[2][2])
    }

    fn minor(&self, r: usize, c: usize) -> S {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let a = self.m[rs[0]][cs[0]].times(&self.m[rs[1]][cs[1]]);
        let b = self.m[rs[0]][cs[1]].times(&self.m[rs[1]][cs[0]]);
        a.minus(&b)
    }

    fn cofactor(&self, r: usize, c: usize) -> S {
        let m = self.minor(r, c);
        if (r + c) % 2 == 0 {
            m
        } else {
            m.negated()
        }
    }

    /// Cofactor expansion along the first row.
    pub fn det(&self) -> S {
        (0..3).fold(S::scalar_zero(), |acc, j| acc.plus(&self.m[0][j].times(&self.cofactor(0, j))))
    }

    /// Transposed cofactor matrix; `A * adj(A) = det(A) I`.
    pub fn adjugate(&self) -> Self {
        Mat3::from_rows(std::array::from_fn(|i| std::array::from_fn(|j| self.cofactor(j, i))))
    }

    /// Inverse via the adjugate. `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det().recip()?;
        Some(self.adjugate().scale(&d))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(S::vanishes)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(S::magnitude).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        self.m.iter().flatten().zip(o.m.iter().flatten()).all(|(a, b)| a.approx_eq(b, tol))
    }
}

impl<'a, S: Scalar> Mul<&'a Mat3<S>> for &'a Mat3<S> {
    type Output = Mat3<S>;
    fn mul(self, rhs: &'a Mat3<S>) -> Mat3<S> {
        Mat3::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(S::scalar_zero(), |acc, k| acc.plus(&self.m[i][k].times(&rhs.m[k][j])))
            })
        }))
    }
}

impl<'a, S: Scalar> Add<&'a Mat3<S>> for &'a Mat3<S> {
    type Output = Mat3<S>;
    fn add(self, rhs: &'a Mat3<S>) -> Mat3<S> {
        Mat3::from_rows(std::array::from_fn(|i| std::array::from_fn(|j| self.m[i][j].plus(&rhs.m[i][j]))))
    }
}

impl<'a, S: Scalar> Sub<&'a Mat3<S>> for &'a Mat3<S> {
    type Output = Mat3<S>;
    fn sub(self, rhs: &'a Mat3<S>) -> Mat3<S> {
        Mat3::from_rows(std::array::from_fn(|i| std::array::from_fn(|j| self.m[i][j].minus(&rhs.m[i][j]))))
    }
}

impl<S: Scalar> Neg for &Mat3<S> {
    type Output = Mat3<S>;
    fn neg(self) -> Mat3<S> {
        self.map(S::negated)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Mat3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat, Rational};

    fn m(rows: [[i64; 3]; 3]) -> Mat3<Rational> {
        Mat3::from_rows(rows.map(|r| r.map(int)))
    }

    #[test]
    fn determinant_and_adjugate() {
        let a = m([[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        assert_eq!(a.det(), int(18));
        assert_eq!(&a * &a.adjugate(), Mat3::scalar(int(18)));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Mat3::identity());
        assert_eq!(inv.get(0, 0), &rat(11, 18));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = m([[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert!(a.inverse().is_none());
    }

    #[test]
    fn transvection_is_unimodular() {
        let e = Mat3::transvection(0, 2, rat(-7, 3));
        assert_eq!(e.det(), int(1));
        assert_eq!(e.trace(), int(3));
    }
}
