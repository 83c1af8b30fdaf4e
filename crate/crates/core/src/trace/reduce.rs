//! Rewriting traces of words in terms of the nine generators.
//!
//! Each step expresses `tr(w)` as a combination of products of traces of
//! strictly simpler words:
//!
//! * a proper power `y^k` uses `tr(y^k) = tr(y) tr(y^(k-1)) - tr(y^-1) tr(y^(k-2)) + tr(y^(k-3))`;
//! * a letter `b^n` with `n >= 2` uses Cayley-Hamilton `b^n = tr(b) b^(n-1) - tr(b^-1) b^(n-2) + b^(n-3)`;
//! * a word with all exponents ±1 that repeats a letter, written `x y x v`,
//!   uses the trace form of the polarized Cayley-Hamilton identity, which
//!   trades `x y x` for words containing `x^2` or fewer letters.
//!
//! The ±1 words that repeat no letter are exactly the generator classes, and
//! the inverse commutator is `P - t5`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::interp::{reduce_by_interpolation_with, InterpolationConfig, DEGREE_SCHEDULE};
use super::TraceError;
use crate::poly::{int, rat, Polynomial, Rational, Variable};
use crate::ring::{generator_word, normal_form, poly_p, GENERATOR_INDICES};
use crate::word::{Letter, Word};

/// A polynomial whose variables may include formal traces `tr(w)`.
pub type TraceExpression = Polynomial;

/// `c * tr(w_1) * ... * tr(w_k)`.
#[derive(Clone, Debug)]
struct TraceTerm {
    coeff: Rational,
    words: Vec<Word>,
}

fn term(coeff: Rational, words: &[&Word]) -> TraceTerm {
    TraceTerm { coeff, words: words.iter().map(|w| (*w).clone()).collect() }
}

/// Rank-2 cyclic representative.
fn canonical(w: &Word) -> Result<Word, TraceError> {
    if w.rank() > 2 {
        return Err(TraceError::RankUnsupported(w.rank()));
    }
    let w2 = if w.rank() == 2 { w.clone() } else { Word::new(2, w.letters().to_vec())? };
    Ok(w2.cyclic_reduce())
}

fn cat(parts: &[&Word]) -> Word {
    let mut letters = Vec::new();
    for p in parts {
        letters.extend_from_slice(p.letters());
    }
    Word::new(2, letters).expect("rank-2 letters").free_reduce()
}

fn from_letters(ls: &[Letter]) -> Word {
    Word::new(2, ls.to_vec()).expect("rank-2 letters")
}

fn generator_table() -> &'static HashMap<Word, i8> {
    static CELL: OnceLock<HashMap<Word, i8>> = OnceLock::new();
    CELL.get_or_init(|| GENERATOR_INDICES.iter().map(|&i| (generator_word(i).cyclic_reduce(), i)).collect())
}

/// Generator value of a canonical word, if it is one of the ten classes.
fn generator_value(w: &Word) -> Option<Polynomial> {
    let i = *generator_table().get(w)?;
    Some(if i == -5 { poly_p() - &Polynomial::t(5) } else { Polynomial::t(i) })
}

/// Proper powers and letters with |exponent| >= 2.
fn power_step(w: &Word) -> Option<Vec<TraceTerm>> {
    let (root, k) = w.primitive_root();
    if k >= 2 {
        let k = k as i32;
        let y = root;
        let yi = y.invert();
        return Some(vec![
            term(int(1), &[&y, &y.pow(k - 1)]),
            term(int(-1), &[&yi, &y.pow(k - 2).free_reduce()]),
            term(int(1), &[&y.pow(k - 3).free_reduce()]),
        ]);
    }
    let pos = w.letters().iter().position(|l| l.exp.abs() >= 2)?;
    let ls = w.letters();
    let rotated: Vec<Letter> = ls[pos..].iter().chain(&ls[..pos]).copied().collect();
    let head = rotated[0];
    let rest = from_letters(&rotated[1..]);
    let n = head.exp.abs();
    let b = Word::letter(2, head.gen, head.exp.signum()).expect("valid letter");
    let bi = b.invert();
    let with = |m: i32| cat(&[&b.pow(m), &rest]);
    Some(vec![
        term(int(1), &[&b, &with(n - 1)]),
        term(int(-1), &[&bi, &with(n - 2)]),
        term(int(1), &[&with(n - 3)]),
    ])
}

/// `tr(x y x v)` for a ±1 word with a repeated letter `x`.
fn rule_step(w: &Word) -> Option<Vec<TraceTerm>> {
    let ls = w.letters();
    let n = ls.len();
    let (i, j) = (0..n).find_map(|i| (i + 1..n).find(|&j| ls[j] == ls[i]).map(|j| (i, j)))?;
    let rotated: Vec<Letter> = ls[i..].iter().chain(&ls[..i]).copied().collect();
    let j = j - i;
    let x = from_letters(&rotated[..1]);
    let y = from_letters(&rotated[1..j]);
    let v = from_letters(&rotated[j + 1..]);
    let x2 = x.pow(2).free_reduce();
    let h = rat(1, 2);
    let words = |ws: &[&Word]| cat(ws);
    let (yx2v, x2yv, x2v, yxv, xyv, xv, yv) = (
        words(&[&y, &x2, &v]),
        words(&[&x2, &y, &v]),
        words(&[&x2, &v]),
        words(&[&y, &x, &v]),
        words(&[&x, &y, &v]),
        words(&[&x, &v]),
        words(&[&y, &v]),
    );
    let (xy, yx2) = (words(&[&x, &y]), words(&[&y, &x2]));
    Some(vec![
        term(int(-1), &[&yx2v]),
        term(int(-1), &[&x2yv]),
        term(int(1), &[&y, &x2v]),
        term(int(1), &[&x, &yxv]),
        term(int(1), &[&x, &xyv]),
        term(int(-1), &[&x, &y, &xv]),
        term(int(1), &[&xy, &xv]),
        term(int(1), &[&yx2, &v]),
        term(int(-1), &[&x, &xy, &v]),
        term(-h.clone(), &[&x, &x, &yv]),
        term(h.clone(), &[&x2, &yv]),
        term(h.clone(), &[&y, &x, &x, &v]),
        term(-h, &[&y, &x2, &v]),
    ])
}

fn combine<F>(terms: &[TraceTerm], mut f: F) -> Result<Polynomial, TraceError>
where
    F: FnMut(&Word) -> Result<Polynomial, TraceError>,
{
    let mut total = Polynomial::zero();
    for t in terms {
        let mut acc = Polynomial::constant(t.coeff.clone());
        for w in &t.words {
            acc = &acc * &f(w)?;
        }
        total = &total + &acc;
    }
    Ok(total)
}

fn cache() -> &'static Mutex<HashMap<Word, Polynomial>> {
    static CELL: OnceLock<Mutex<HashMap<Word, Polynomial>>> = OnceLock::new();
    CELL.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Forget all memoized reductions.
pub fn clear_cache() {
    cache().lock().expect("cache lock").clear();
}

fn reduce_canonical(w: &Word) -> Result<Polynomial, TraceError> {
    if w.is_identity() {
        return Ok(Polynomial::from_int(3));
    }
    if let Some(p) = generator_value(w) {
        return Ok(p);
    }
    if let Some(p) = cache().lock().expect("cache lock").get(w) {
        return Ok(p.clone());
    }
    let terms = power_step(w)
        .or_else(|| rule_step(w))
        .ok_or_else(|| TraceError::ReductionFailed(format!("no rule applies to {w}")))?;
    let raw = combine(&terms, |u| reduce_canonical(&canonical(u)?))?;
    let out = normal_form(&raw);
    cache().lock().expect("cache lock").insert(w.clone(), out.clone());
    Ok(out)
}

/// Rewrite rules only, without the interpolation fallback.
pub fn reduce_with_rules(w: &Word) -> Result<Polynomial, TraceError> {
    reduce_canonical(&canonical(w)?)
}

/// `tr(w)` as a polynomial in t(±1..±4) and t5, of t5-degree at most 1.
pub fn reduce_trace_word(w: &Word) -> Result<Polynomial, TraceError> {
    match reduce_with_rules(w) {
        Ok(p) => Ok(p),
        Err(TraceError::ReductionFailed(_)) => {
            let cw = canonical(w)?;
            let mut last = TraceError::ReductionFailed(format!("no method reduced {cw}"));
            for bound in DEGREE_SCHEDULE {
                match reduce_by_interpolation_with(&cw, bound, &InterpolationConfig::default()) {
                    Ok(p) => return Ok(p),
                    Err(e) => last = e,
                }
            }
            Err(last)
        }
        Err(e) => Err(e),
    }
}

/// The formal symbol `tr(w)`, keyed by the cyclic representative; the
/// identity word gives the constant 3.
pub fn trace_symbol(w: &Word) -> Result<TraceExpression, TraceError> {
    let c = canonical(w)?;
    Ok(if c.is_identity() { Polynomial::from_int(3) } else { Polynomial::var(Variable::TraceSym(c)) })
}

/// Expand every trace symbol whose word has a letter with |exponent| >= 2
/// (or is a proper power) until none remain. Other symbols are untouched.
pub fn reduce_power(expr: &TraceExpression) -> Result<TraceExpression, TraceError> {
    let mut current = expr.clone();
    loop {
        let mut images: HashMap<Variable, Polynomial> = HashMap::new();
        for v in current.variables() {
            if let Variable::TraceSym(w) = &v {
                if w.letters().iter().any(|l| l.exp.abs() >= 2) {
                    let terms = power_step(w).expect("a letter power always expands");
                    images.insert(v.clone(), combine(&terms, trace_symbol)?);
                }
            }
        }
        if images.is_empty() {
            return Ok(current);
        }
        current = current.substitute_with(|v| images.get(v).cloned());
    }
}

/// Replace every trace symbol by its reduction to generators.
pub fn trace_expression_to_generators(expr: &TraceExpression) -> Result<Polynomial, TraceError> {
    let mut images: HashMap<Variable, Polynomial> = HashMap::new();
    for v in expr.variables() {
        if let Variable::TraceSym(w) = &v {
            images.insert(v.clone(), reduce_trace_word(w)?);
        }
    }
    Ok(normal_form(&expr.substitute_with(|v| images.get(v).cloned())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sample_sl3q;
    use crate::ring::pi_map;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn check_on_samples(word: &Word, seeds: std::ops::Range<u64>) {
        let q = reduce_trace_word(word).unwrap();
        for seed in seeds {
            let pair = sample_sl3q(seed, 6).unwrap();
            let pt = pi_map(&pair).unwrap();
            assert_eq!(pt.eval(&q).unwrap(), pair.trace_word(word).unwrap(), "{word} at seed {seed}");
        }
    }

    #[test]
    fn generators_and_identity() {
        assert_eq!(reduce_trace_word(&w("x1")).unwrap(), Polynomial::t(1));
        assert_eq!(reduce_trace_word(&Word::identity(2)).unwrap(), Polynomial::from_int(3));
        assert_eq!(reduce_trace_word(&w("X2 x1 x2 X1")).unwrap(), Polynomial::t(5));
        assert_eq!(reduce_trace_word(&w("x2 x1 X2 X1")).unwrap(), poly_p() - &Polynomial::t(5));
    }

    #[test]
    fn squares() {
        assert_eq!(reduce_trace_word(&w("x1^2")).unwrap(), p("t1^2 - 2*t-1"));
        assert_eq!(reduce_trace_word(&w("x1 x2 x1 x2")).unwrap(), p("t3^2 - 2*t-3"));
    }

    #[test]
    fn sample_agreement() {
        for s in ["X1^2 x2", "x1 X2 x1 x2", "X1 x2 x1 x2", "x1^3 X2^2", "x1 X2 X1 X2 x1 x2", "X2^2 x1^2 x2 X1", "x1^4", "X2^3 x1"] {
            check_on_samples(&w(s), 0..4);
        }
    }

    #[test]
    fn rank_one_words_are_accepted() {
        let r1 = Word::parse("x1^2", 1).unwrap();
        assert_eq!(reduce_trace_word(&r1).unwrap(), p("t1^2 - 2*t-1"));
        let r3 = Word::parse("x3", 3).unwrap();
        assert_eq!(reduce_trace_word(&r3), Err(TraceError::RankUnsupported(3)));
    }

    #[test]
    fn power_reduction_on_symbols() {
        let e = trace_symbol(&w("x1^2")).unwrap();
        let r = reduce_power(&e).unwrap();
        assert_eq!(r.to_string(), "tr(x1)^2 - 2*tr(X1)");
        let untouched = trace_symbol(&w("x1")).unwrap();
        assert_eq!(reduce_power(&untouched).unwrap(), untouched);
        let mixed = trace_symbol(&w("X1^2 x2")).unwrap();
        let r = reduce_power(&mixed).unwrap();
        for v in r.variables() {
            if let Variable::TraceSym(u) = v {
                assert!(u.letters().iter().all(|l| l.exp.abs() == 1));
            }
        }
        assert_eq!(trace_expression_to_generators(&r).unwrap(), reduce_trace_word(&w("X1^2 x2")).unwrap());
    }
}
