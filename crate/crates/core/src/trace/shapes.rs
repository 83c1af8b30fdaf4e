//! Candidate generators of the trace algebra of rank `r`.
//!
//! Each shape is a sign pattern; `+` is a generator and `-` an inverse. All
//! index choices in `1..=r` are substituted, the resulting words are
//! cyclically reduced, and words that are trivial or pick up an exponent of
//! absolute value 2 or more are dropped. Two words count as the same
//! candidate exactly when they are conjugate.

use std::collections::BTreeSet;

use crate::word::{Letter, Word};

pub const SHAPES: [&str; 16] = [
    "+", "-", "++", "+++", "+-", "--", "++-", "++++", "+++++", "+++-", "+--", "---", "++--", "+-+-", "++++-", "++++++",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorShape {
    pub shape: &'static str,
    pub word: Word,
}

/// Distinct conjugacy classes realised by the sixteen shapes in rank `r`,
/// each reported with the first shape that produced it.
pub fn classify_generators(r: u8) -> Vec<GeneratorShape> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if r == 0 {
        return out;
    }
    for shape in SHAPES {
        let signs: Vec<i32> = shape.chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
        let n = signs.len();
        let total = (r as usize).pow(n as u32);
        for code in 0..total {
            let mut rest = code;
            let letters: Vec<Letter> = signs
                .iter()
                .map(|&s| {
                    let g = (rest % r as usize) as u8 + 1;
                    rest /= r as usize;
                    Letter::new(g, s)
                })
                .collect();
            let w = Word::new(r, letters).expect("indices in range").cyclic_reduce();
            if w.is_identity() || w.letters().iter().any(|l| l.exp.abs() != 1) {
                continue;
            }
            if seen.insert(w.clone()) {
                out.push(GeneratorShape { shape, word: w });
            }
        }
    }
    out
}
