use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Mat3, MatrixError, RepPair};
use crate::poly::{rat, Rational};

pub const DEFAULT_FACTORS: usize = 6;

fn random_transvection(rng: &mut ChaCha8Rng) -> Mat3<Rational> {
    let i = rng.random_range(0..3usize);
    let j = (i + rng.random_range(1..3usize)) % 3;
    let mut num = 0i64;
    while num == 0 {
        num = rng.random_range(-9..=9);
    }
    let den = rng.random_range(1..=9);
    Mat3::transvection(i, j, rat(num, den))
}

fn random_sl3(rng: &mut ChaCha8Rng, n_factors: usize) -> Mat3<Rational> {
    let mut m = Mat3::identity();
    for _ in 0..n_factors {
        m = &m * &random_transvection(rng);
    }
    m
}

/// A pair of exact SL(3,Q) matrices, each a product of `n_factors` random
/// transvections. Same seed, same pair, on every platform.
pub fn sample_sl3q(seed: u64, n_factors: usize) -> Result<RepPair<Rational>, MatrixError> {
    if n_factors == 0 {
        return Err(MatrixError::NoFactors);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_sl3(&mut rng, n_factors);
    let b = random_sl3(&mut rng, n_factors);
    RepPair::new(a, b)
}

/// Random exact SL(3,Q) matrix, for conjugation tests.
pub fn sample_conjugator(seed: u64) -> Mat3<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    random_sl3(&mut rng, super::DEFAULT_FACTORS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn deterministic_and_unimodular() {
        let a = sample_sl3q(42, 6).unwrap();
        let b = sample_sl3q(42, 6).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.m1().det(), int(1));
        assert_eq!(a.m2().det(), int(1));
        assert_ne!(a, sample_sl3q(43, 6).unwrap());
    }

    #[test]
    fn single_factor_is_unipotent() {
        let p = sample_sl3q(1, 1).unwrap();
        assert_eq!(p.m1().trace(), int(3));
        assert_eq!(sample_sl3q(1, 0), Err(MatrixError::NoFactors));
    }
}
