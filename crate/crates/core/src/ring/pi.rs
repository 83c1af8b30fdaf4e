//! The evaluation map Π from matrix pairs to generator values.

use std::sync::OnceLock;

use super::relations::poly_p;
use crate::matrix::{MatrixError, RepPair};
use crate::poly::{PolyError, Polynomial, Scalar, Variable};
use crate::word::Word;

/// The word whose trace defines t(i), for i in ±1..±5.
pub fn generator_word(i: i8) -> Word {
    static WORDS: OnceLock<Vec<Word>> = OnceLock::new();
    let words = WORDS.get_or_init(|| {
        GENERATOR_INDICES
            .iter()
            .map(|&i| {
                let pairs: &[(u8, i32)] = match i {
                    1 => &[(1, 1)],
                    -1 => &[(1, -1)],
                    2 => &[(2, 1)],
                    -2 => &[(2, -1)],
                    3 => &[(1, 1), (2, 1)],
                    -3 => &[(1, -1), (2, -1)],
                    4 => &[(1, 1), (2, -1)],
                    -4 => &[(1, -1), (2, 1)],
                    5 => &[(1, 1), (2, 1), (1, -1), (2, -1)],
                    _ => &[(2, 1), (1, 1), (2, -1), (1, -1)],
                };
                Word::from_pairs(pairs)
            })
            .collect()
    });
    words[slot(i)].clone()
}

/// t1, t-1, t2, ..., t5, t-5.
pub const GENERATOR_INDICES: [i8; 10] = [1, -1, 2, -2, 3, -3, 4, -4, 5, -5];

fn slot(i: i8) -> usize {
    assert!(i != 0 && i.abs() <= 5, "t{i} is not a generator");
    2 * (i.unsigned_abs() as usize - 1) + usize::from(i < 0)
}

/// Values of the ten generator traces at one point. `t(-5)` is always
/// present; when not supplied it is computed as `P - t5`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorPoint<S> {
    values: [S; 10],
}

impl<S: Scalar> GeneratorPoint<S> {
    /// From the eight R-values (in `R_GENERATORS` order) and t5.
    pub fn new(r: [S; 8], t5: S) -> Result<Self, PolyError> {
        let mut values: [S; 10] = std::array::from_fn(|_| S::scalar_zero());
        for (k, v) in r.into_iter().enumerate() {
            values[k] = v;
        }
        values[8] = t5.clone();
        let partial = GeneratorPoint { values };
        let p = partial.eval(poly_p())?;
        let mut values = partial.values;
        values[9] = p.minus(&t5);
        Ok(GeneratorPoint { values })
    }

    pub fn with_t_minus5(r: [S; 8], t5: S, tm5: S) -> Self {
        let mut it = r.into_iter().chain([t5, tm5]);
        GeneratorPoint { values: std::array::from_fn(|_| it.next().expect("ten values")) }
    }

    /// Value of t(i), i in ±1..±5. Panics on any other index.
    pub fn t(&self, i: i8) -> &S {
        &self.values[slot(i)]
    }

    pub fn r_values(&self) -> [S; 8] {
        std::array::from_fn(|k| self.values[k].clone())
    }

    /// Value bound to a `T` variable; `None` for any other variable.
    pub fn value(&self, v: &Variable) -> Option<S> {
        match v {
            Variable::T(i) if *i != 0 && i.abs() <= 5 => Some(self.t(*i).clone()),
            _ => None,
        }
    }

    pub fn eval(&self, f: &Polynomial) -> Result<S, PolyError> {
        f.eval(|v| self.value(v))
    }

    /// Same R-values with a different t5 (and t-5 recomputed).
    pub fn with_t5(&self, t5: S) -> Result<Self, PolyError> {
        Self::new(self.r_values(), t5)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GeneratorPoint<T> {
        GeneratorPoint { values: std::array::from_fn(|k| f(&self.values[k])) }
    }
}

/// Π: the ten generator traces of a matrix pair.
pub fn pi_map<S: Scalar>(pair: &RepPair<S>) -> Result<GeneratorPoint<S>, MatrixError> {
    let mut traces = Vec::with_capacity(10);
    for i in GENERATOR_INDICES {
        traces.push(pair.trace_word(&generator_word(i))?);
    }
    let mut it = traces.into_iter();
    Ok(GeneratorPoint { values: std::array::from_fn(|_| it.next().expect("ten traces")) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sample_sl3q;
    use crate::poly::{int, Rational};
    use crate::ring::{poly_q, sextic};

    #[test]
    fn identity_pair_maps_to_threes() {
        let p = pi_map(&RepPair::<Rational>::identity()).unwrap();
        for i in GENERATOR_INDICES {
            assert_eq!(p.t(i), &int(3));
        }
        assert_eq!(p.eval(poly_p()).unwrap(), int(6));
        assert_eq!(p.eval(poly_q()).unwrap(), int(9));
        assert_eq!(p.eval(sextic()).unwrap(), int(0));
    }

    #[test]
    fn kernel_identities_on_samples() {
        for seed in 0..5 {
            let p = pi_map(&sample_sl3q(seed, 6).unwrap()).unwrap();
            assert_eq!(p.eval(poly_p()).unwrap(), p.t(5) + p.t(-5));
            assert_eq!(p.eval(poly_q()).unwrap(), p.t(5) * p.t(-5));
            let rebuilt = GeneratorPoint::new(p.r_values(), p.t(5).clone()).unwrap();
            assert_eq!(rebuilt, p);
        }
    }

    #[test]
    fn generator_words() {
        assert_eq!(generator_word(5).to_string(), "x1 x2 X1 X2");
        assert_eq!(generator_word(-5), generator_word(5).invert());
        assert_eq!(generator_word(-4).to_string(), "X1 x2");
    }
}
