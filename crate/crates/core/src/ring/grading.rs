//! The Z3 x Z3 grading of the character ring, induced by scaling each matrix
//! by a cube root of unity.

use super::RingError;
use crate::poly::{Monomial, Polynomial, Variable};

/// Per-generator weighted degree of t(i): the bidegree of its defining word.
/// `t5` and `t-5` both come from words of bidegree (3, 3).
pub fn generator_bidegree(i: i8) -> (u32, u32) {
    match i {
        1 => (1, 0),
        -1 => (2, 0),
        2 => (0, 1),
        -2 => (0, 2),
        3 => (1, 1),
        -3 => (2, 2),
        4 => (1, 2),
        -4 => (2, 1),
        5 | -5 => (3, 3),
        _ => panic!("t{i} is not a generator"),
    }
}

fn variable_index(v: &Variable) -> Result<i8, RingError> {
    match v {
        Variable::T(i) => Ok(*i),
        other => Err(RingError::VariableOutOfSubring(other.to_string())),
    }
}

/// Sum of generator bidegrees, without reduction.
pub fn monomial_bidegree(m: &Monomial) -> Result<(u32, u32), RingError> {
    let mut d = (0, 0);
    for (v, e) in m.factors() {
        let (a, b) = generator_bidegree(variable_index(v)?);
        d.0 += a * e;
        d.1 += b * e;
    }
    Ok(d)
}

pub fn grading_weight(m: &Monomial) -> Result<(u8, u8), RingError> {
    let (a, b) = monomial_bidegree(m)?;
    Ok(((a % 3) as u8, (b % 3) as u8))
}

/// The common weight of all terms, or `None` if the terms disagree. The
/// zero polynomial is reported as weight (0, 0).
pub fn is_homogeneous(f: &Polynomial) -> Result<Option<(u8, u8)>, RingError> {
    let mut weight = None;
    for (m, _) in f.terms() {
        let w = grading_weight(m)?;
        match weight {
            None => weight = Some(w),
            Some(prev) if prev != w => return Ok(None),
            Some(_) => {}
        }
    }
    Ok(Some(weight.unwrap_or((0, 0))))
}
