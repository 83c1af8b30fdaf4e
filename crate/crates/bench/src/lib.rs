//! Shared inputs for the criterion benchmarks.

use charvar_core::matrix::{sample_sl3q, RepPair, DEFAULT_FACTORS};
use charvar_core::{Rational, Word};

/// Words of increasing length and exponent size.
pub const BENCH_WORDS: [&str; 5] = ["x1 x2", "x1 X2 x1 X2 x1 x2", "x1^2 x2^2 X1 X2", "x1^4 X2", "x1 x2 x1 x2 x1 x2 x1 x2"];

pub fn bench_words() -> Vec<Word> {
    BENCH_WORDS.iter().map(|w| w.parse().expect("built-in word parses")).collect()
}

pub fn sample_pairs(seed: u64, n: usize) -> Vec<RepPair<Rational>> {
    (0..n as u64).map(|k| sample_sl3q(seed + k, DEFAULT_FACTORS).expect("positive factor count")).collect()
}
