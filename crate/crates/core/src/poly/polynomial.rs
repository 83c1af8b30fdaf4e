use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{Monomial, Rational, Scalar, Variable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("no value bound for variable {0}")]
    MissingBinding(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Sparse polynomial with rational coefficients. Zero coefficients are never
/// stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    /// Shorthand for the generator `t(i)`.
    pub fn t(i: i8) -> Self {
        Self::var(Variable::t(i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &Variable) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(v, _)| v.clone())).collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial(&self, v: &Variable) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let rest = if e > 1 { rest.mul(&Monomial::from_factors([(v.clone(), e - 1)])) } else { rest };
            out.add_term(rest, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Coefficients of `v^0, v^1, ...` as polynomials free of `v`.
    pub fn coefficients_in(&self, v: &Variable) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = vec![Self::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Replace each variable for which `f` returns `Some` by that polynomial.
    pub fn substitute_with<F>(&self, f: F) -> Self
    where
        F: Fn(&Variable) -> Option<Polynomial>,
    {
        let mut cache: HashMap<Variable, Option<Polynomial>> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = Self::constant(c.clone());
            for (v, e) in m.factors() {
                let image = cache.entry(v.clone()).or_insert_with(|| f(v));
                match image {
                    Some(p) => acc = &acc * &p.pow(*e),
                    None => kept = kept.mul(&Monomial::from_factors([(v.clone(), *e)])),
                }
            }
            for (m2, c2) in acc.terms {
                out.add_term(m2.mul(&kept), c2);
            }
        }
        out
    }

    pub fn substitute(&self, v: &Variable, image: &Polynomial) -> Self {
        self.substitute_with(|w| if w == v { Some(image.clone()) } else { None })
    }

    /// Evaluate with variable values supplied by `f`.
    pub fn eval<S, F>(&self, f: F) -> Result<S, PolyError>
    where
        S: Scalar,
        F: Fn(&Variable) -> Option<S>,
    {
        let mut cache: HashMap<&Variable, S> = HashMap::new();
        let mut total = S::scalar_zero();
        for (m, c) in &self.terms {
            let mut acc = S::from_rational(c);
            for (v, e) in m.factors() {
                let val = match cache.get(v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = f(v).ok_or_else(|| PolyError::MissingBinding(v.to_string()))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                acc = acc.times(&val.pow(*e));
            }
            total = total.plus(&acc);
        }
        Ok(total)
    }

    pub fn eval_map<S: Scalar>(&self, values: &HashMap<Variable, S>) -> Result<S, PolyError> {
        self.eval(|v| values.get(v).cloned())
    }

    /// Apply `f` to every coefficient, dropping terms that become zero.
    pub fn map_coefficients<F: Fn(&Rational) -> Rational>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn t(i: i8) -> Polynomial {
        Polynomial::t(i)
    }

    #[test]
    fn display_examples() {
        assert_eq!((&t(1) * &t(-1)).scale(&int(2)).to_string(), "2*t1*t-1");
        assert_eq!((t(1).pow(2) - t(-1).scale(&int(2))).to_string(), "t1^2 - 2*t-1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!((t(2).scale(&rat(-1, 2)) + Polynomial::from_int(3)).to_string(), "-1/2*t2 + 3");
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = t(1) + t(2);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q, Polynomial::zero());
    }

    #[test]
    fn partial_derivative() {
        let p = t(1).pow(3) * t(2) + t(2);
        assert_eq!(p.partial(&Variable::t(1)), t(1).pow(2).scale(&int(3)) * t(2));
        assert_eq!(p.partial(&Variable::t(2)), t(1).pow(3) + Polynomial::one());
        assert!(p.partial(&Variable::t(3)).is_zero());
    }

    #[test]
    fn evaluation_and_missing_binding() {
        let p = t(1) * t(2) + Polynomial::from_int(1);
        let v = p.eval(|v| match v {
            Variable::T(1) => Some(int(2)),
            Variable::T(2) => Some(rat(1, 3)),
            _ => None,
        });
        assert_eq!(v.unwrap(), rat(5, 3));
        let e = p.eval::<Rational, _>(|v| if *v == Variable::t(1) { Some(int(1)) } else { None });
        assert_eq!(e, Err(PolyError::MissingBinding("t2".into())));
    }

    #[test]
    fn substitution() {
        let p = t(5).pow(2) + t(1);
        let q = p.substitute(&Variable::t(5), &(t(1) + Polynomial::one()));
        assert_eq!(q, t(1).pow(2) + t(1).scale(&int(3)) + Polynomial::one());
    }

    #[test]
    fn coefficients_in_variable() {
        let p = t(5).pow(2) * t(1) + t(5) + Polynomial::from_int(7);
        let c = p.coefficients_in(&Variable::t(5));
        assert_eq!(c, vec![Polynomial::from_int(7), Polynomial::one(), t(1)]);
    }
}
