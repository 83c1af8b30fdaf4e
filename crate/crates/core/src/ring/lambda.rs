//! The 9x9 Gram matrix of the bilinear form `B(a, b) = 3 tr(ab) - tr(a) tr(b)`
//! on a fixed word basis, whose vanishing determinant produces Q.

use std::sync::OnceLock;

use super::pi::GeneratorPoint;
use super::relations::{poly_p, poly_q};
use super::RingError;
use crate::linalg::{det_generic, det_rational, interpolate_univariate};
use crate::matrix::{MatrixError, RepPair};
use crate::poly::{int, Polynomial, Rational, Scalar};
use crate::trace::reduce_trace_word;
use crate::word::Word;

/// A1..A9.
pub const LAMBDA_BASIS: [&str; 9] = ["x1", "x2", "X1", "X2", "x1 x2", "x2 x1", "x1 X2", "X2 x1", "x2 X1"];

pub fn lambda_basis() -> Vec<Word> {
    LAMBDA_BASIS.iter().map(|s| s.parse().expect("basis word parses")).collect()
}

/// `B(A_i, A_j)` evaluated on a matrix pair.
pub fn lambda_matrix<S: Scalar>(pair: &RepPair<S>) -> Result<Vec<Vec<S>>, MatrixError> {
    let mats = lambda_basis().iter().map(|w| pair.eval_word(w)).collect::<Result<Vec<_>, _>>()?;
    let traces: Vec<S> = mats.iter().map(|m| m.trace()).collect();
    let three = S::from_i64(3);
    Ok((0..9)
        .map(|i| {
            (0..9)
                .map(|j| three.times(&(&mats[i] * &mats[j]).trace()).minus(&traces[i].times(&traces[j])))
                .collect()
        })
        .collect())
}

pub fn lambda_det<S: Scalar>(pair: &RepPair<S>) -> Result<S, MatrixError> {
    Ok(det_generic(lambda_matrix(pair)?))
}

/// Entries of Λ rewritten in the nine generators (t5-degree at most 1).
pub fn lambda_symbolic() -> Result<&'static Vec<Vec<Polynomial>>, RingError> {
    static CELL: OnceLock<Vec<Vec<Polynomial>>> = OnceLock::new();
    if let Some(v) = CELL.get() {
        return Ok(v);
    }
    let basis = lambda_basis();
    let three = Polynomial::from_int(3);
    let single = basis.iter().map(reduce_trace_word).collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::with_capacity(9);
    for i in 0..9 {
        let mut row = Vec::with_capacity(9);
        for j in 0..9 {
            let w = basis[i].concat(&basis[j])?;
            let t = reduce_trace_word(&w)?;
            row.push(&(&three * &t) - &(&single[i] * &single[j]));
        }
        rows.push(row);
    }
    Ok(CELL.get_or_init(|| rows))
}

/// `det Λ = P1 t5^2 + P2 t5 + P3` at one point of R, with the t5
/// dependence recovered exactly by interpolating in t5.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaFactorization {
    /// Coefficients of det Λ as a polynomial in t5, constant first.
    pub coefficients: Vec<Rational>,
    pub p: Rational,
    pub q: Rational,
}

impl LambdaFactorization {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    fn coeff(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(|| int(0))
    }

    pub fn p1(&self) -> Rational {
        self.coeff(2)
    }

    pub fn p2(&self) -> Rational {
        self.coeff(1)
    }

    pub fn p3(&self) -> Rational {
        self.coeff(0)
    }

    /// Degree at most 2 with `P2 = -P P1` and `P3 = Q P1`, i.e.
    /// `det Λ = P1 (t5^2 - P t5 + Q)`.
    pub fn matches_sextic(&self) -> bool {
        self.degree() <= 2 && self.p2() == -(&self.p * self.p1()) && self.p3() == &self.q * self.p1()
    }
}

pub fn lambda_factorization(point: &GeneratorPoint<Rational>) -> Result<LambdaFactorization, RingError> {
    let entries = lambda_symbolic()?;
    // det Λ has t5-degree at most 9 since every entry is linear in t5
    let xs: Vec<Rational> = (0..10).map(int).collect();
    let mut ys = Vec::with_capacity(xs.len());
    for x in &xs {
        let pt = point.with_t5(x.clone())?;
        let m = entries
            .iter()
            .map(|row| row.iter().map(|e| pt.eval(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        ys.push(det_rational(&m));
    }
    Ok(LambdaFactorization {
        coefficients: interpolate_univariate(&xs, &ys),
        p: point.eval(poly_p())?,
        q: point.eval(poly_q())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sample_sl3q;
    use crate::ring::pi_map;

    #[test]
    fn identity_pair_gives_zero_matrix() {
        let m = lambda_matrix(&RepPair::<Rational>::identity()).unwrap();
        assert!(m.iter().flatten().all(|x| x.vanishes()));
    }

    #[test]
    fn singular_and_symmetric() {
        let pair = sample_sl3q(3, 6).unwrap();
        let m = lambda_matrix(&pair).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(m[i][j], m[j][i]);
            }
        }
        assert_eq!(det_rational(&m), int(0));
    }

    #[test]
    fn symbolic_entries_agree_with_matrices() {
        let pair = sample_sl3q(11, 6).unwrap();
        let pt = pi_map(&pair).unwrap();
        let m = lambda_matrix(&pair).unwrap();
        let s = lambda_symbolic().unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(pt.eval(&s[i][j]).unwrap(), m[i][j]);
            }
        }
        let t5_entries: usize = s.iter().flatten().filter(|e| e.degree_in(&crate::poly::Variable::t(5)) > 0).count();
        assert_eq!(t5_entries, 2);
    }

    #[test]
    fn factorization_at_a_sample() {
        let pt = pi_map(&sample_sl3q(5, 6).unwrap()).unwrap();
        let f = lambda_factorization(&pt).unwrap();
        assert!(f.matches_sextic(), "{:?}", f.coefficients);
        assert_ne!(f.p1(), int(0));
    }
}
