//! Generators of the Jacobian ideal of the sextic and the singular-family
//! substitutions.

use std::sync::OnceLock;

use super::partials::{partials_p, partials_q};
use super::relations::poly_p;
use crate::poly::{parse_polynomial, Polynomial, Variable};

/// Labels of the nine Jacobian generators, aligned with [`jacobian_generators`].
/// `Some(i)` is `-t5 dP/di + dQ/di`; `None` is `2 t5 - P`.
pub const JACOBIAN_LABELS: [Option<i8>; 9] =
    [Some(1), Some(-1), Some(2), Some(-2), Some(3), Some(-3), Some(4), Some(-4), None];

pub fn jacobian_generators() -> &'static [Polynomial; 9] {
    static CELL: OnceLock<[Polynomial; 9]> = OnceLock::new();
    CELL.get_or_init(|| {
        let t5 = Polynomial::t(5);
        JACOBIAN_LABELS.map(|label| match label {
            Some(i) => &partials_q()[&i] - &(&t5 * &partials_p()[&i]),
            None => &t5.scale(&crate::poly::int(2)) - poly_p(),
        })
    })
}

/// The generator for index `i`, or `2 t5 - P` for `None`.
pub fn jacobian_generator(label: Option<i8>) -> Option<&'static Polynomial> {
    let k = JACOBIAN_LABELS.iter().position(|l| *l == label)?;
    Some(&jacobian_generators()[k])
}

const SL2_T4: &str = "t1*t2 - t3 - t1 - t2 + 3";
const SL2_T5: &str = "3 - 3*t1 + t1^2 - 3*t2 + t1*t2 + t2^2 - 3*t3 + t1*t3 + t2*t3 - t1*t2*t3 + t3^2";

/// Substitution describing the image of SL(2) x SL(2) embedded block-wise:
/// `t-i = t_i` for `1 <= i <= 4`, then t4 and t5 as polynomials in t1, t2, t3.
pub fn sl2_substitute(f: &Polynomial) -> Polynomial {
    static IMAGES: OnceLock<(Polynomial, Polynomial)> = OnceLock::new();
    let (t4, t5) = IMAGES.get_or_init(|| {
        (
            parse_polynomial(SL2_T4).expect("built-in text parses"),
            parse_polynomial(SL2_T5).expect("built-in text parses"),
        )
    });
    f.substitute_with(|v| match v {
        Variable::T(i) if i.abs() <= 3 => Some(Polynomial::t(i.abs())),
        Variable::T(4) | Variable::T(-4) => Some(t4.clone()),
        Variable::T(5) => Some(t5.clone()),
        Variable::T(-5) => Some(poly_p().substitute_with(|w| match w {
            Variable::T(j) if j.abs() <= 3 => Some(Polynomial::t(j.abs())),
            Variable::T(_) => Some(t4.clone()),
            _ => None,
        }) - t5.clone()),
        _ => None,
    })
}

/// Closed forms of the index ±1 generators on the (a, c) family:
/// `(-(a^3 - 1)^3 / (4 a^4), (a^3 - 1)^3 / (4 a^5))`.
pub fn ac_family_expected(a: f64) -> (f64, f64) {
    let k = (a.powi(3) - 1.0).powi(3);
    (-k / (4.0 * a.powi(4)), k / (4.0 * a.powi(5)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{family_ac, family_diag, family_gl2, family_sl2};
    use crate::poly::{int, rat, ComplexF, Rational, Scalar};
    use crate::ring::{branch_discriminant, pi_map, sextic};

    #[test]
    fn last_generator_is_t5_derivative_of_sextic() {
        assert_eq!(jacobian_generators()[8], sextic().partial(&Variable::t(5)));
        for (k, label) in JACOBIAN_LABELS.iter().enumerate() {
            if let Some(i) = label {
                let formal = sextic().partial(&Variable::t(*i));
                assert_eq!(jacobian_generators()[k], formal, "index {i}");
            }
        }
    }

    #[test]
    fn sl2_substitution_kills_every_generator() {
        for g in jacobian_generators() {
            assert!(sl2_substitute(g).is_zero());
        }
    }

    #[test]
    fn sl2_substitution_matches_embedding() {
        let b = |a: i64, b: i64, c: i64, d: i64| [[int(a), int(b)], [int(c), int(d)]];
        let pair = family_sl2(&b(2, 1, 1, 1), &b(1, -2, 1, -1)).unwrap();
        let pt = pi_map(&pair).unwrap();
        let t4 = sl2_substitute(&Polynomial::t(4));
        let t5 = sl2_substitute(&Polynomial::t(5));
        assert_eq!(pt.eval(&t4).unwrap(), pt.t(4).clone());
        assert_eq!(pt.eval(&t5).unwrap(), pt.t(5).clone());
    }

    #[test]
    fn diagonal_points_are_singular() {
        let pair = family_diag(&int(2), &rat(-1, 3), &rat(5, 7), &int(4)).unwrap();
        let pt = pi_map(&pair).unwrap();
        for g in jacobian_generators() {
            assert_eq!(pt.eval(g).unwrap(), Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn gl2_points_lie_on_branch_locus() {
        let b = |a: i64, b: i64, c: i64, d: i64| [[int(a), int(b)], [int(c), int(d)]];
        let pair = family_gl2(&b(2, 1, 3, 5), &b(1, -1, 4, 2)).unwrap();
        let pt = pi_map(&pair).unwrap();
        assert!(pt.eval(branch_discriminant()).unwrap().vanishes());
        assert!(pt.eval(&jacobian_generators()[8]).unwrap().vanishes());
    }

    #[test]
    fn ac_family_values() {
        let (e1, em1) = ac_expected_check(&int(2), &int(1));
        assert!((e1 + 343.0 / 64.0).abs() < 1e-9);
        assert!((em1 - 343.0 / 128.0).abs() < 1e-9);
        // exact branch: c/4 = 8
        let pair = family_ac(&int(3), &int(32)).unwrap();
        assert!(pair.is_exact());
        let (x, y) = ac_family_expected(3.0);
        let pt = pi_map(&pair.to_complex().unwrap()).unwrap();
        let vals: Vec<ComplexF> = jacobian_generators().iter().map(|g| pt.eval(g).unwrap()).collect();
        assert!((vals[0].re() - x).abs() < 1e-9 && (vals[1].re() - y).abs() < 1e-9);
    }

    fn ac_expected_check(a: &Rational, c: &Rational) -> (f64, f64) {
        let pair = family_ac(a, c).unwrap().to_complex().unwrap();
        let pt = pi_map(&pair).unwrap();
        let vals: Vec<ComplexF> = jacobian_generators().iter().map(|g| pt.eval(g).unwrap()).collect();
        for v in &vals[2..] {
            assert!(v.abs() < 1e-9, "{v}");
        }
        (vals[0].re(), vals[1].re())
    }
}
