//! Words in the free group on `rank` generators.
//!
//! A [`Word`] is a sequence of [`Letter`]s `x_g^e`. Words are rank-tagged so
//! that tables keyed on rank-2 words can never be fed a rank-3 word by
//! accident.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: u8, rank: u8 },
    #[error("letter exponent must be nonzero")]
    ZeroExponent,
    #[error("cannot combine words of rank {0} and {1}")]
    RankMismatch(u8, u8),
    #[error("operation only defined for rank 2, got rank {0}")]
    RankUnsupported(u8),
    #[error("invalid word syntax at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: u8,
    pub exp: i32,
}

impl Letter {
    pub fn new(gen: u8, exp: i32) -> Self {
        debug_assert!(gen >= 1 && exp != 0);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }

    fn key(&self) -> (u8, bool, u32) {
        (self.gen, self.exp < 0, self.exp.unsigned_abs())
    }
}

// index ascending, then positive before negative, then magnitude
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u8,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(rank: u8, letters: Vec<Letter>) -> Result<Self, WordError> {
        for l in &letters {
            if l.exp == 0 {
                return Err(WordError::ZeroExponent);
            }
            if l.gen == 0 || l.gen > rank {
                return Err(WordError::GeneratorOutOfRange { gen: l.gen, rank });
            }
        }
        Ok(Word { rank, letters })
    }

    pub fn identity(rank: u8) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// `x_gen^exp` as a one-letter word.
    pub fn letter(rank: u8, gen: u8, exp: i32) -> Result<Self, WordError> {
        Word::new(rank, vec![Letter { gen, exp }])
    }

    /// Rank-2 word from `(generator, exponent)` pairs. Panics on bad input;
    /// intended for literals in tables and tests.
    pub fn from_pairs(pairs: &[(u8, i32)]) -> Self {
        let letters = pairs.iter().map(|&(g, e)| Letter::new(g, e)).collect();
        Word::new(2, letters).expect("valid rank-2 letters")
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    /// Positive letters count once, negative letters twice.
    pub fn weighted_length(&self) -> u32 {
        self.letters.iter().map(weighted).sum()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch(self.rank, other.rank));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    /// `self^n` for any integer n; negative powers go through [`Word::invert`].
    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { rank: self.rank, letters }
    }

    pub fn invert(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        Word { rank: self.rank, letters }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut out, l);
        }
        Word { rank: self.rank, letters: out }
    }

    /// Representative of the conjugacy class: freely and cyclically reduced,
    /// then rotated to the lexicographically least rotation.
    pub fn cyclic_reduce(&self) -> Word {
        let mut letters = self.free_reduce().letters;
        while letters.len() >= 2 {
            let first = letters[0];
            let last = letters[letters.len() - 1];
            if first.gen != last.gen {
                break;
            }
            letters.pop();
            let exp = first.exp + last.exp;
            if exp == 0 {
                letters.remove(0);
            } else {
                letters[0].exp = exp;
            }
        }
        Word { rank: self.rank, letters: least_rotation(letters) }
    }

    /// Exponent sum of each generator, indexed by `gen - 1`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank as usize];
        for l in &self.letters {
            sums[l.gen as usize - 1] += l.exp as i64;
        }
        sums
    }

    /// Weighted length of the word restricted to each generator, without
    /// reduction mod 3.
    pub fn bidegree(&self) -> Result<(u32, u32), WordError> {
        if self.rank != 2 {
            return Err(WordError::RankUnsupported(self.rank));
        }
        let mut d = (0, 0);
        for l in &self.letters {
            if l.gen == 1 {
                d.0 += weighted(l);
            } else {
                d.1 += weighted(l);
            }
        }
        Ok(d)
    }

    /// Z3 x Z3 weight: the weighted length of each single-generator
    /// restriction, mod 3.
    pub fn z3_weight(&self) -> Result<(u8, u8), WordError> {
        // a negative letter contributes 2|e| = -2e, congruent to e mod 3, so
        // deleting the other generator and reducing never changes the class
        let (a, b) = self.bidegree()?;
        Ok(((a % 3) as u8, (b % 3) as u8))
    }

    /// For a cyclically reduced word, the shortest root `y` and the largest
    /// `k` with `self == y^k`.
    pub fn primitive_root(&self) -> (Word, u32) {
        let n = self.letters.len();
        if n == 0 {
            return (self.clone(), 1);
        }
        let mut best = (self.clone(), 1);
        for p in 1..n {
            if n % p != 0 {
                continue;
            }
            if (p..n).all(|i| self.letters[i] == self.letters[i - p]) {
                let root = Word { rank: self.rank, letters: self.letters[..p].to_vec() };
                best = (root, (n / p) as u32);
                break;
            }
        }
        // a single letter x^e is itself the e-th power of x^sign(e)
        if best.0.letters.len() == 1 {
            let l = best.0.letters[0];
            if l.exp.abs() > 1 {
                let k = best.1 * l.exp.unsigned_abs();
                let root = Word { rank: self.rank, letters: vec![Letter::new(l.gen, l.exp.signum())] };
                return (root, k);
            }
        }
        best
    }

    /// Apply a substitution of generators by words, then free-reduce.
    pub fn substitute(&self, images: &[Word]) -> Result<Word, WordError> {
        let mut out = Word::identity(images.first().map_or(self.rank, |w| w.rank));
        for l in &self.letters {
            let image = images
                .get(l.gen as usize - 1)
                .ok_or(WordError::GeneratorOutOfRange { gen: l.gen, rank: images.len() as u8 })?;
            out = out.concat(&image.pow(l.exp))?;
        }
        Ok(out.free_reduce())
    }

    /// The letter swap x1 <-> x2.
    pub fn tau(&self) -> Result<Word, WordError> {
        self.require_rank2()?;
        self.substitute(&[Word::from_pairs(&[(2, 1)]), Word::from_pairs(&[(1, 1)])])
    }

    /// The inversion x1 -> x1^-1 (x2 fixed).
    pub fn iota(&self) -> Result<Word, WordError> {
        self.require_rank2()?;
        self.substitute(&[Word::from_pairs(&[(1, -1)]), Word::from_pairs(&[(2, 1)])])
    }

    /// The transvection x1 -> x1 x2 (x2 fixed). Exposed as a word map only.
    pub fn eta(&self) -> Result<Word, WordError> {
        self.require_rank2()?;
        self.substitute(&[Word::from_pairs(&[(1, 1), (2, 1)]), Word::from_pairs(&[(2, 1)])])
    }

    fn require_rank2(&self) -> Result<(), WordError> {
        if self.rank == 2 {
            Ok(())
        } else {
            Err(WordError::RankUnsupported(self.rank))
        }
    }

    /// Parse with an explicit rank. See the crate README for the grammar.
    pub fn parse(text: &str, rank: u8) -> Result<Word, WordError> {
        let bytes = text.as_bytes();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() || c == b'*' {
                i += 1;
                continue;
            }
            if c == b'1' && letters.is_empty() && text[i + 1..].trim().is_empty() {
                // lone "1" is the identity
                i += 1;
                continue;
            }
            let sign = match c {
                b'x' => 1,
                b'X' => -1,
                _ => {
                    return Err(WordError::Parse { pos: i, msg: format!("unexpected '{}'", c as char) })
                }
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let gen: u8 = text[start..i]
                .parse()
                .map_err(|_| WordError::Parse { pos: start, msg: "expected generator index".into() })?;
            let mut exp = 1i32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let estart = i;
                if i < bytes.len() && bytes[i] == b'-' {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                exp = text[estart..i]
                    .parse()
                    .map_err(|_| WordError::Parse { pos: estart, msg: "expected exponent".into() })?;
                if exp == 0 {
                    return Err(WordError::ZeroExponent);
                }
            }
            if gen == 0 || gen > rank {
                return Err(WordError::GeneratorOutOfRange { gen, rank });
            }
            letters.push(Letter { gen, exp: sign * exp });
        }
        Word::new(rank, letters)
    }
}

fn weighted(l: &Letter) -> u32 {
    if l.exp > 0 {
        l.exp as u32
    } else {
        2 * l.exp.unsigned_abs()
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if let Some(top) = out.last_mut() {
        if top.gen == l.gen {
            top.exp += l.exp;
            if top.exp == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push(l);
}

fn least_rotation(letters: Vec<Letter>) -> Vec<Letter> {
    let n = letters.len();
    if n < 2 {
        return letters;
    }
    let mut best = 0;
    for r in 1..n {
        let cand = (0..n).map(|i| letters[(r + i) % n]);
        let cur = (0..n).map(|i| letters[(best + i) % n]);
        if cand.cmp(cur) == Ordering::Less {
            best = r;
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&letters[best..]);
    out.extend_from_slice(&letters[..best]);
    out
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let x = if l.exp > 0 { 'x' } else { 'X' };
            write!(f, "{}{}", x, l.gen)?;
            if l.exp.abs() > 1 {
                write!(f, "^{}", l.exp.abs())?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses a rank-2 word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert!(w("x1 X1").free_reduce().is_identity());
        assert_eq!(w("x1 x1^2 x2").free_reduce(), w("x1^3 x2"));
        assert_eq!(w("x1 x2 X2 x1").free_reduce(), w("x1^2"));
    }

    #[test]
    fn cyclic_reduction_examples() {
        assert_eq!(w("x1 x2 X1").cyclic_reduce(), w("x2"));
        assert_eq!(w("x1 x2 X1 X2").cyclic_reduce(), w("x1 x2 X1 X2"));
        assert_eq!(w("X2 x1 x2 x2").cyclic_reduce(), w("x1 x2"));
        assert_eq!(w("X2 x1 x2 X1").cyclic_reduce(), w("x1 x2 X1 X2"));
    }

    #[test]
    fn inversion() {
        assert_eq!(w("x1 x2").invert(), w("X2 X1"));
        assert!(Word::identity(2).invert().is_identity());
        assert_eq!(w("x1 x2 X1 X2").invert(), w("x2 x1 X2 X1"));
    }

    #[test]
    fn weighted_lengths() {
        assert_eq!(w("x1 x2").weighted_length(), 2);
        assert_eq!(w("x1^3 X2^2").weighted_length(), 7);
        assert_eq!(w("x1^3 X2^2").length(), 5);
        assert_eq!(w("x1 x2 X1 X2").weighted_length(), 6);
    }

    #[test]
    fn z3_weights() {
        assert_eq!(w("x1 x2").z3_weight().unwrap(), (1, 1));
        assert_eq!(w("x1 X2").z3_weight().unwrap(), (1, 2));
        assert_eq!(w("x1 x2 X1 X2").z3_weight().unwrap(), (0, 0));
        let r3 = Word::parse("x3", 3).unwrap();
        assert_eq!(r3.z3_weight(), Err(WordError::RankUnsupported(3)));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["x1^3 X2^2", "x1 x2 X1 X2", "X2^4", "1"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert_eq!(w("x1^-2"), w("X1^2"));
        assert!(matches!("x3".parse::<Word>(), Err(WordError::GeneratorOutOfRange { .. })));
        assert!(matches!("y1".parse::<Word>(), Err(WordError::Parse { .. })));
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = Word::parse("x1", 2).unwrap();
        let b = Word::parse("x1", 3).unwrap();
        assert_eq!(a.concat(&b), Err(WordError::RankMismatch(2, 3)));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(w("x1 x2 x1 x2").primitive_root(), (w("x1 x2"), 2));
        assert_eq!(w("x1^3").primitive_root(), (w("x1"), 3));
        assert_eq!(w("X2^2").primitive_root(), (w("X2"), 2));
        assert_eq!(w("x1 x2 X1 X2").primitive_root(), (w("x1 x2 X1 X2"), 1));
    }

    #[test]
    fn automorphisms_on_words() {
        assert_eq!(w("x1 X2").tau().unwrap(), w("x2 X1"));
        assert_eq!(w("x1 x2").iota().unwrap(), w("X1 x2"));
        assert_eq!(w("x1").eta().unwrap(), w("x1 x2"));
        assert_eq!(w("X1").eta().unwrap(), w("X2 X1"));
    }
}
