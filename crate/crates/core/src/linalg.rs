//! Exact linear algebra over the rationals by fraction-free (Bareiss)
//! elimination, plus a pivoting determinant for any [`Scalar`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("system is inconsistent")]
    Inconsistent,
    #[error("system is underdetermined (rank {rank} < {unknowns} unknowns)")]
    Underdetermined { rank: usize, unknowns: usize },
    #[error("rows have inconsistent lengths")]
    Ragged,
}

/// Scale a rational row to integers by the lcm of its denominators.
fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Bareiss elimination in place on an integer matrix. Returns the pivot
/// columns; rows past `pivots.len()` are zero afterwards. Only the first
/// `ncols` columns are pivot candidates.
fn bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..m[i].len() {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve `a x = b` for a system with at least as many rows as unknowns.
/// Exact: the unique solution, or an error saying why there is none.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    let n = a.first().map_or(0, Vec::len);
    if a.len() != b.len() || a.iter().any(|r| r.len() != n) {
        return Err(LinalgError::Ragged);
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full = row.clone();
            full.push(rhs.clone());
            integer_row(&full)
        })
        .collect();
    let pivots = bareiss(&mut m, n);
    let rank = pivots.len();
    if m[rank..].iter().any(|row| !row[n].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    if rank < n {
        return Err(LinalgError::Underdetermined { rank, unknowns: n });
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Ok(x)
}

pub fn rank(a: &[Vec<Rational>]) -> usize {
    let n = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    bareiss(&mut m, n).len()
}

/// Exact determinant of a square rational matrix.
pub fn det_rational(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let scales: Vec<BigInt> = a.iter().map(|r| r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))).collect();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| integer_row(r)).collect();
    // track row swaps for the sign
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(c, p);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                m[i][j] = (&m[c][c] * &m[i][j] - &m[i][c] * &m[c][j]) / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    let denom = scales.iter().fold(BigInt::one(), |acc, s| acc * s);
    Rational::new(sign * prev, denom)
}

/// Determinant by Gaussian elimination with partial pivoting on magnitude.
/// Exact for rationals, floating for complex scalars.
pub fn det_generic<S: Scalar>(mut m: Vec<Vec<S>>) -> S {
    let n = m.len();
    let mut det = S::scalar_one();
    for c in 0..n {
        let p = (c..n)
            .max_by(|&i, &j| m[i][c].magnitude().total_cmp(&m[j][c].magnitude()))
            .expect("nonempty range");
        if m[p][c].vanishes() {
            return S::scalar_zero();
        }
        if p != c {
            m.swap(c, p);
            det = det.negated();
        }
        let inv = m[c][c].recip().expect("nonzero pivot");
        det = det.times(&m[c][c]);
        for i in c + 1..n {
            let f = m[i][c].times(&inv);
            if f.vanishes() {
                continue;
            }
            for j in c..n {
                let v = m[i][j].minus(&f.times(&m[c][j]));
                m[i][j] = v;
            }
        }
    }
    det
}

/// Coefficients (constant first) of the unique polynomial of degree
/// `< xs.len()` through the given points, by Newton divided differences.
pub fn interpolate_univariate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    // expand the Newton form
    let mut coeffs = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        // coeffs = coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}
