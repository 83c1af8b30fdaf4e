//! The defining relations of the coordinate ring: `t5 + t-5 = P` and
//! `t5 * t-5 = Q`, so `t5` satisfies the sextic `t5^2 - P t5 + Q = 0`.

use std::sync::OnceLock;

use crate::poly::{parse_polynomial, Polynomial, Variable};

const P_TEXT: &str = "t1*t-1*t2*t-2 - t1*t2*t-3 - t-1*t-2*t3 - t1*t-2*t-4 - t-1*t2*t4 \
    + t1*t-1 + t2*t-2 + t3*t-3 + t4*t-4 - 3";

const Q_TEXT: &str = "9 - 6*t1*t-1 - 6*t2*t-2 - 6*t3*t-3 - 6*t4*t-4 + t1^3 + t2^3 + t3^3 + t4^3 \
    + t-1^3 + t-2^3 + t-3^3 + t-4^3 - 3*t-4*t-3*t-1 - 3*t4*t3*t1 \
    - 3*t-4*t2*t3 - 3*t4*t-2*t-3 + 3*t-4*t-2*t1 + 3*t4*t2*t-1 \
    + 3*t1*t2*t-3 + 3*t-1*t-2*t3 + t-2*t-1*t2*t1 + t-3*t-2*t3*t2 \
    + t-4*t-1*t4*t1 + t-4*t-2*t4*t2 + t-3*t-1*t3*t1 \
    + t-3*t-4*t3*t4 + t-4^2*t-3*t-2 + t4^2*t3*t2 + t-1^2*t-2*t-4 + t1^2*t2*t4 \
    + t1*t-2^2*t-3 + t-1*t2^2*t3 + t-4*t-3*t1^2 + t4*t3*t-1^2 \
    + t-4*t2*t-3^2 + t4*t-2*t3^2 + t-1^2*t-3*t2 + t1^2*t3*t-2 \
    + t-4*t1*t2^2 + t4*t-1*t-2^2 + t-4*t3*t-2^2 + t4*t-3*t2^2 \
    + t1*t3*t-4^2 + t-1*t-3*t4^2 + t-1*t-4*t3^2 + t1*t4*t-3^2 - 2*t-3^2*t-2*t-1 \
    - 2*t3^2*t2*t1 - 2*t-4^2*t-1*t2 - 2*t4^2*t1*t-2 + t-1^2*t-2^2*t-3 + t1^2*t2^2*t3 \
    + t-4*t-1^2*t2^2 + t4*t1^2*t-2^2 - t-4*t-2^2*t2*t1 - t4*t2^2*t-2*t-1 \
    - t-3*t1^2*t-1*t2 - t3*t-1^2*t1*t-2 - t-3*t2^2*t-2*t1 - t3*t-2^2*t2*t-1 \
    - t-4*t-2*t-1*t1^2 - t4*t2*t1*t-1^2 - t-1*t-2^3*t1 - t-1*t2^3*t1 \
    - t-1^3*t-2*t2 - t1^3*t-2*t2 - t-4*t-3*t-2*t-1*t2 - t4*t3*t2*t1*t-2 \
    - t-1*t1*t2*t-4*t3 - t-1*t1*t-2*t4*t-3 + t-2*t-1^2*t1^2*t2 + t-1*t-2^2*t2^2*t1";

/// Generators of the symmetrizer identities: `S(p) = P + 3`, `S(q) = Q - 9`.
const SMALL_P_TEXT: &str = "1/8*(t1*t-1*t2*t-2 - 4*t1*t-2*t-4 + 2*t1*t-1 + 2*t3*t-3)";

const SMALL_Q_TEXT: &str = "1/8*(2*t-2*t-1^2*t1^2*t2 + 4*t1^2*t2^2*t3 - 4*t1^3*t-2*t2 - 8*t-4*t-2*t-1*t1^2 \
    - 4*t4*t3*t2*t1*t-2 + 8*t1*t3*t-4^2 + 8*t-4*t1*t2^2 - 8*t3^2*t2*t1 \
    + 4*t4*t-3*t2^2 + t-2*t-1*t2*t1 + t-3*t-4*t3*t4 + 4*t-3*t-1*t3*t1 \
    + 4*t1^3 + 4*t3^3 + 12*t-4*t-2*t1 - 12*t-4*t2*t3 - 12*t1*t-1 - 12*t3*t-3)";

fn cached(cell: &'static OnceLock<Polynomial>, text: &str) -> &'static Polynomial {
    cell.get_or_init(|| parse_polynomial(text).expect("built-in polynomial text parses"))
}

/// `P = t5 + t-5` as a polynomial in the eight R-generators.
pub fn poly_p() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, P_TEXT)
}

/// `Q = t5 * t-5` as a polynomial in the eight R-generators.
pub fn poly_q() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, Q_TEXT)
}

pub fn small_p() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, SMALL_P_TEXT)
}

pub fn small_q() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    cached(&CELL, SMALL_Q_TEXT)
}

/// `t5^2 - P t5 + Q`, whose zero set is the character variety.
pub fn sextic() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    CELL.get_or_init(|| {
        let t5 = Polynomial::t(5);
        &(&t5.pow(2) - &(poly_p() * &t5)) + poly_q()
    })
}

/// `P^2 - 4Q`: the two roots in t5 coincide exactly where this vanishes.
pub fn branch_discriminant() -> &'static Polynomial {
    static CELL: OnceLock<Polynomial> = OnceLock::new();
    CELL.get_or_init(|| &poly_p().pow(2) - &poly_q().scale(&crate::poly::int(4)))
}

/// Unique representative with t5-degree at most 1 and no t-5, obtained by
/// `t-5 -> P - t5` and then `t5^2 -> P t5 - Q` repeatedly.
pub fn normal_form(f: &Polynomial) -> Polynomial {
    let t5 = Variable::t(5);
    let g = f.substitute(&Variable::t(-5), &(poly_p() - &Polynomial::t(5)));
    let mut c = g.coefficients_in(&t5);
    for k in (2..c.len()).rev() {
        let ck = std::mem::take(&mut c[k]);
        c[k - 1] = &c[k - 1] + &(&ck * poly_p());
        c[k - 2] = &c[k - 2] - &(&ck * poly_q());
    }
    match c.len() {
        0 => Polynomial::zero(),
        1 => c.swap_remove(0),
        _ => &c[0] + &(&c[1] * &Polynomial::t(5)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_counts() {
        assert_eq!(poly_p().num_terms(), 10);
        assert_eq!(poly_q().num_terms(), 73);
        assert_eq!(poly_q().degree(), 6);
        assert_eq!(poly_p().degree(), 4);
    }

    #[test]
    fn normal_form_reduces_t5_powers() {
        let t5 = Polynomial::t(5);
        assert_eq!(normal_form(&t5.pow(2)), &(poly_p() * &t5) - poly_q());
        assert!(normal_form(sextic()).is_zero());
        let both = &t5 * &Polynomial::t(-5);
        assert_eq!(normal_form(&both), poly_q().clone());
        assert_eq!(normal_form(&(&t5 + &Polynomial::t(-5))), poly_p().clone());
    }
}
