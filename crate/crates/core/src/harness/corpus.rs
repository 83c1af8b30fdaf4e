//! The fixed word corpus for reduction soundness.
//!
//! In order: every cyclic class of rank-2 words with all exponents ±1 and
//! weighted length at most 6; the words of the `{t4, t5}` alternating sum;
//! then powers and mixed-exponent words with exponents up to 4, until the
//! corpus has [`CORPUS_SIZE`] distinct cyclic classes.

use std::collections::BTreeSet;

use crate::poisson::T45_WORDS;
use crate::word::{Letter, Word};

pub const CORPUS_SIZE: usize = 50;

const EXTRA: [&str; 40] = [
    "x1^2", "x1^3", "x1^4", "X1^2", "X1^3", "X1^4", "x2^2", "x2^3", "x2^4", "X2^2", "X2^3", "X2^4",
    "x1 x2 x1 x2 x1 x2 x1 x2", "x1 X2 x1 X2 x1 X2", "x1 X2 x1 X2 x1 X2 x1 X2", "X1 x2 X1 x2 X1 x2",
    "X1 X2 X1 X2", "X1 X2 X1 X2 X1 X2", "x1^2 x2", "x1^2 X2", "X1^2 x2", "x1 x2^2", "X1 x2^2", "x1 X2^2",
    "x1^3 x2", "x1 x2^3", "x1^4 x2", "x1 x2^4", "x1^2 x2^2", "X1^2 X2^2", "x1^2 X2^2", "x1^2 x2 X1 x2",
    "x1^3 X2^2", "X1^3 x2", "x2^2 X1^2 x2", "x1 X2^3", "X1^2 x2^3", "x1^4 X2", "X2^4 x1", "x1^2 x2^2 X1 X2",
];

fn unit_classes() -> Vec<Word> {
    // ±1 words whose cyclically adjacent letters use different generators
    let letters = [Letter::new(1, 1), Letter::new(1, -1), Letter::new(2, 1), Letter::new(2, -1)];
    let weight = |l: &Letter| if l.exp > 0 { 1 } else { 2 };
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = letters.iter().map(|l| vec![*l]).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            let n = w.len();
            let cyclic_ok = n == 1 || w[0].gen != w[n - 1].gen;
            if cyclic_ok {
                let word = Word::new(2, w.clone()).expect("rank-2 letters").cyclic_reduce();
                if seen.insert(word.clone()) {
                    out.push(word);
                }
            }
            let used: u32 = w.iter().map(weight).sum();
            for l in letters {
                if l.gen != w[n - 1].gen && used + weight(&l) <= 6 {
                    let mut longer = w.clone();
                    longer.push(l);
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }
    out
}

/// The corpus, as cyclically reduced representatives in a fixed order.
pub fn reduction_corpus() -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |w: Word| {
        if out.len() < CORPUS_SIZE && seen.insert(w.cyclic_reduce()) {
            out.push(w);
        }
    };
    for w in unit_classes() {
        push(w);
    }
    for (_, text) in T45_WORDS {
        push(text.parse().expect("built-in word parses"));
    }
    for text in EXTRA {
        push(text.parse().expect("built-in word parses"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_unit_classes() {
        let u = unit_classes();
        assert_eq!(u.len(), 16);
        assert!(u.iter().all(|w| w.weighted_length() <= 6));
    }

    #[test]
    fn corpus_is_full_and_distinct() {
        let c = reduction_corpus();
        assert_eq!(c.len(), CORPUS_SIZE);
        let classes: BTreeSet<Word> = c.iter().map(Word::cyclic_reduce).collect();
        assert_eq!(classes.len(), CORPUS_SIZE);
        for (_, text) in T45_WORDS {
            let w: Word = text.parse().unwrap();
            assert!(classes.contains(&w.cyclic_reduce()), "{text}");
        }
    }
}
