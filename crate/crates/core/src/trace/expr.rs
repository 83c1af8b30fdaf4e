//! Formal matrix expressions: finite sums `Σ c_w w` of words whose
//! coefficients are polynomials in trace symbols.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::reduce::{trace_symbol, TraceExpression};
use super::TraceError;
use crate::matrix::{Mat3, RepPair};
use crate::poly::{rat, Polynomial, Scalar, Variable};
use crate::ring::generator_word;
use crate::word::Word;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MatrixExpression {
    terms: BTreeMap<Word, TraceExpression>,
}

fn rank2(w: &Word) -> Result<Word, TraceError> {
    if w.rank() > 2 {
        return Err(TraceError::RankUnsupported(w.rank()));
    }
    Ok(Word::new(2, w.letters().to_vec())?.free_reduce())
}

impl MatrixExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: &Word) -> Result<Self, TraceError> {
        let mut e = Self::zero();
        e.push(rank2(w)?, Polynomial::one());
        Ok(e)
    }

    /// `c * I`.
    pub fn scalar(c: TraceExpression) -> Self {
        let mut e = Self::zero();
        e.push(Word::identity(2), c);
        e
    }

    fn push(&mut self, w: Word, c: TraceExpression) {
        let slot = self.terms.entry(w).or_insert_with(Polynomial::zero);
        *slot = &*slot + &c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TraceExpression)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.push(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Polynomial::from_int(-1)))
    }

    pub fn scale(&self, c: &TraceExpression) -> Self {
        let mut out = Self::zero();
        for (w, d) in &self.terms {
            out.push(w.clone(), d * c);
        }
        out
    }

    /// Product, concatenating words and freely reducing.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let w = a.concat(b).expect("both operands are rank 2").free_reduce();
                out.push(w, ca * cb);
            }
        }
        out
    }

    /// Trace, with each word replaced by its trace symbol.
    pub fn trace(&self) -> Result<TraceExpression, TraceError> {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            out = &out + &(c * &trace_symbol(w)?);
        }
        Ok(out)
    }

    /// The matrix obtained by substituting a pair for `x1, x2`.
    pub fn eval<S: Scalar>(&self, pair: &RepPair<S>) -> Result<Mat3<S>, TraceError> {
        let mut values: HashMap<Variable, S> = HashMap::new();
        let mut out = Mat3::zero();
        for (w, c) in &self.terms {
            for v in c.variables() {
                if let Variable::TraceSym(u) = &v {
                    if !values.contains_key(&v) {
                        values.insert(v.clone(), pair.trace_word(u)?);
                    }
                }
            }
            let coeff = c.eval_map(&values)?;
            out = &out + &pair.eval_word(w)?.scale(&coeff);
        }
        Ok(out)
    }

    /// `(degree, trace degree)`. See [`degree_bounds`].
    pub fn degree_bounds(&self) -> (u32, u32) {
        degree_bounds(self)
    }
}

impl fmt::Display for MatrixExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let word = if w.is_identity() { "I".to_string() } else { w.to_string() };
            if c == &Polynomial::one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "({c})*{word}")?;
            }
        }
        Ok(())
    }
}

fn symbol_weight(v: &Variable) -> u32 {
    match v {
        Variable::TraceSym(w) => w.weighted_length(),
        Variable::T(i) => generator_word(*i).weighted_length(),
        _ => 0,
    }
}

/// Largest sum of weighted lengths of the trace symbols in any monomial.
pub fn trace_degree(e: &TraceExpression) -> u32 {
    e.terms()
        .map(|(m, _)| m.factors().iter().map(|(v, k)| symbol_weight(v) * k).sum::<u32>())
        .max()
        .unwrap_or(0)
}

/// The degree is the largest weighted length of a word present; the trace
/// degree also adds the weights of the coefficient's trace symbols.
pub fn degree_bounds(e: &MatrixExpression) -> (u32, u32) {
    e.terms.iter().fold((0, 0), |(d, td), (w, c)| {
        let wl = w.weighted_length();
        (d.max(wl), td.max(wl + trace_degree(c)))
    })
}

/// The trace-polynomial form of `y x^2 + x^2 y + x y x`.
pub fn pol_expression(x: &Word, y: &Word) -> Result<MatrixExpression, TraceError> {
    let xe = MatrixExpression::word(x)?;
    let ye = MatrixExpression::word(y)?;
    let x2 = xe.mul(&xe);
    let tx = trace_symbol(x)?;
    let ty = trace_symbol(y)?;
    let tx2 = x2.trace()?;
    let txy = xe.mul(&ye).trace()?;
    let tyx2 = ye.mul(&x2).trace()?;
    let h = Polynomial::constant(rat(1, 2));
    let txsq = &tx * &tx;
    let parts = [
        x2.scale(&ty),
        ye.mul(&xe).scale(&tx),
        xe.mul(&ye).scale(&tx),
        xe.scale(&(&txy - &(&tx * &ty))),
        MatrixExpression::scalar(&tyx2 - &(&tx * &txy)),
        ye.scale(&-(&h * &(&txsq - &tx2))),
        MatrixExpression::scalar(&h * &(&(&ty * &txsq) - &(&ty * &tx2))),
    ];
    Ok(parts.iter().fold(MatrixExpression::zero(), |acc, p| acc.add(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sample_sl3q;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn pol_expression_matches_matrices() {
        for (xs, ys) in [("x1", "x2"), ("x1 x2", "X1"), ("X2", "x1 x1")] {
            let (x, y) = (w(xs), w(ys));
            let e = pol_expression(&x, &y).unwrap();
            for seed in 0..3 {
                let pair = sample_sl3q(seed, 5).unwrap();
                let mx = pair.eval_word(&x).unwrap();
                let my = pair.eval_word(&y).unwrap();
                let x2 = &mx * &mx;
                let lhs = &(&(&my * &x2) + &(&x2 * &my)) + &(&(&mx * &my) * &mx);
                assert_eq!(e.eval(&pair).unwrap(), lhs, "{xs}, {ys}");
            }
        }
    }

    #[test]
    fn pol_degrees() {
        let e = pol_expression(&w("x1"), &w("x2")).unwrap();
        assert_eq!(e.degree_bounds(), (2, 3));
    }

    #[test]
    fn algebra() {
        let a = MatrixExpression::word(&w("x1")).unwrap();
        let b = MatrixExpression::word(&w("X1")).unwrap();
        assert_eq!(a.mul(&b), MatrixExpression::scalar(Polynomial::one()));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.trace().unwrap(), trace_symbol(&w("x1")).unwrap());
        assert_eq!(MatrixExpression::scalar(Polynomial::one()).trace().unwrap(), Polynomial::from_int(3));
        let s = a.scale(&Polynomial::from_int(2)).add(&MatrixExpression::scalar(Polynomial::from_int(3)));
        assert_eq!(s.to_string(), "(2)*x1 + (3)*I");
    }
}
