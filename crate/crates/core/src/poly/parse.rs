//! Text syntax for polynomials.
//!
//! Generators are `t1 .. t5` and `t-1 .. t-5` (no space before the digit).
//! `L1..L3` are eigenvalue symbols, `s t a c` are parameters and `tr(w)` is
//! the trace of a word. Operators: `+ - * / ^` and parentheses; `/` only
//! divides by a nonzero constant.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Param, PolyError, Polynomial, Rational, Variable};
use crate::word::Word;

pub fn parse_polynomial(text: &str) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

impl std::str::FromStr for Polynomial {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<u8> {
        self.src.as_bytes().get(self.pos + k).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::from_integer(1.into()) / c)),
                    _ => return Err(PolyError::Parse { pos: at, msg: "division by a non-constant or zero".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let n = self.uint()?;
            let n: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.src[start..self.pos].parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.error("unexpected end of input"))?;
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if !self.eat(b')') {
                return Err(self.error("expected ')'"));
            }
            return Ok(e);
        }
        if c.is_ascii_digit() {
            let n = self.uint()?;
            return Ok(Polynomial::constant(Rational::from_integer(n)));
        }
        if self.src[self.pos..].starts_with("tr(") {
            self.pos += 3;
            let start = self.pos;
            let end = self.src[start..].find(')').ok_or_else(|| self.error("unterminated tr("))? + start;
            let w = Word::parse(&self.src[start..end], 2)
                .map_err(|e| PolyError::Parse { pos: start, msg: e.to_string() })?;
            self.pos = end + 1;
            return Ok(Polynomial::var(Variable::TraceSym(w.cyclic_reduce())));
        }
        match c {
            b't' => {
                self.pos += 1;
                let neg = self.peek() == Some(b'-') && matches!(self.peek_at(1), Some(d) if d.is_ascii_digit());
                if neg {
                    self.pos += 1;
                }
                if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                    let at = self.pos;
                    let i = self.uint()?;
                    let i: i8 = i.try_into().unwrap_or(0);
                    if !(1..=5).contains(&i) {
                        return Err(PolyError::Parse { pos: at, msg: "generator index must be 1..5".into() });
                    }
                    Ok(Polynomial::t(if neg { -i } else { i }))
                } else {
                    Ok(Polynomial::var(Variable::Param(Param::T)))
                }
            }
            b'L' => {
                self.pos += 1;
                let at = self.pos;
                let j = self.uint()?;
                let j: u8 = j.try_into().unwrap_or(0);
                if !(1..=3).contains(&j) {
                    return Err(PolyError::Parse { pos: at, msg: "eigenvalue index must be 1..3".into() });
                }
                Ok(Polynomial::var(Variable::Lam(j)))
            }
            b's' | b'a' | b'c' => {
                self.pos += 1;
                let p = match c {
                    b's' => Param::S,
                    b'a' => Param::A,
                    _ => Param::C,
                };
                Ok(Polynomial::var(Variable::Param(p)))
            }
            _ => Err(self.error(&format!("unexpected '{}'", c as char))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    #[test]
    fn parses_generators_and_rationals() {
        let p = parse_polynomial("t1^2 - 2*t-1").unwrap();
        assert_eq!(p, Polynomial::t(1).pow(2) - Polynomial::t(-1).scale(&int(2)));
        let q = parse_polynomial("3/4*t5 + 1/2").unwrap();
        assert_eq!(q, Polynomial::t(5).scale(&rat(3, 4)) + Polynomial::constant(rat(1, 2)));
    }

    #[test]
    fn bare_t_is_a_parameter() {
        let p = parse_polynomial("t - 1").unwrap();
        assert_eq!(p.to_string(), "t - 1");
        let q = parse_polynomial("t-1").unwrap();
        assert_eq!(q, Polynomial::t(-1));
    }

    #[test]
    fn trace_symbols_are_canonicalised() {
        let p = parse_polynomial("tr(x2 x1) - tr(x1 x2)").unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(parse_polynomial("t1 + "), Err(PolyError::Parse { pos: 5, .. })));
        assert!(matches!(parse_polynomial("t7"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_polynomial("t1 / t2"), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_polynomial("(t1"), Err(PolyError::Parse { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["t1^2 - 2*t-1", "2*t1*t-1", "-t5 + 3", "1/2*t1^3*t2*t-4 - 7/3"] {
            assert_eq!(parse_polynomial(s).unwrap().to_string(), s);
        }
    }
}
