//! The Poisson bracket on the coordinate ring, for the presentation of the
//! free group as the fundamental group of a three-holed sphere.
//!
//! Only three generator brackets are nonzero: `{t4, t-4}`, `{t4, t5}` and
//! `{t-4, t5}`. Boundary traces t(±1), t(±2), t(±3) are Casimirs. Everything
//! else follows from bilinearity, antisymmetry and the Leibniz rule.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::poly::{parse_polynomial, Polynomial, Variable};
use crate::ring::{apply_dihedral, normal_form, poly_p, poly_q, DihedralElement};
use crate::trace::{reduce_trace_word, TraceError};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PoissonError {
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// The nine coordinates, t(-5) having been eliminated.
pub const COORDINATES: [i8; 9] = [1, -1, 2, -2, 3, -3, 4, -4, 5];

const A45_TEXT: &str = "t4*(t1*t-1 + t2*t-2 + t3*t-3 - t5 - 6) + t-4*(2*t1*t3 + 2*t-2*t-3 - 4*t-1*t2) \
    + t5*t1*t-2 + 3*t-4^2 - 3*t-1*t-3 - 3*t2*t3 + 3*t1*t-2 + t-1^2*t-2 + t1^2*t-3 + t2*t-3^2 \
    + t1*t2^2 + t3*t-2^2 + t-1*t3^2 + t-1^2*t2^2 - t1*t-1*t2*t3 - t-3*t-2*t-1*t2 - t1*t2*t-2^2 \
    - t-2*t-1*t1^2";

const AM45_TEXT: &str = "t-4*(t5 - t-1*t1 - t2*t-2 - t3*t-3 + 6) + t4*(4*t1*t-2 - 2*t-1*t-3 - 2*t2*t3) \
    - t5*t-1*t2 - 3*t4^2 + 3*t1*t3 + 3*t-2*t-3 - 3*t-1*t2 - t1^2*t2 - t-1^2*t3 - t-2*t3^2 \
    - t-1*t-2^2 - t-3*t2^2 - t1*t-3^2 - t1^2*t-2^2 + t-1*t1*t-2*t-3 + t3*t2*t1*t-2 + t-1*t-2*t2^2 \
    + t2*t1*t-1^2";

/// Cofactor of `P - 2 t5` in the printed `{t4, Q}`.
const T4_Q_COFACTOR: &str = "-6*t4 + 3*t-4^2 - 3*t-1*t-3 - 3*t2*t3 + 3*t1*t-2 + t1*t-1*t4 + t2*t-2*t4 \
    + t3*t-3*t4 + t-1^2*t-2 + t1^2*t-3 + t2*t-3^2 + t1*t2^2 + t3*t-2^2 + t-1*t3^2 + t-1^2*t2^2 \
    - t1*t-1*t2*t3 - t-3*t-2*t-1*t2 - t1*t2*t-2^2 - t-2*t-1*t1^2 + 2*t1*t3*t-4 + 2*t-2*t-3*t-4 \
    - 4*t-1*t2*t-4";

/// Cofactor of `2 t5 - P` in the printed `{t-4, Q}`.
const TM4_Q_COFACTOR: &str = "-6*t-4 + 3*t4^2 - 3*t1*t3 - 3*t-2*t-3 + 3*t-1*t2 + t1*t-1*t-4 + t2*t-2*t-4 \
    + t3*t-3*t-4 + t1^2*t2 + t-1^2*t3 + t-2*t3^2 + t-1*t-2^2 + t-3*t2^2 + t1*t-3^2 + t1^2*t-2^2 \
    - t1*t-1*t-2*t-3 - t3*t-2*t1*t2 - t-1*t-2*t2^2 - t2*t1*t-1^2 + 2*t-1*t-3*t4 + 2*t2*t3*t4 \
    - 4*t1*t-2*t4";

/// The four words of the alternating sum for `{t4, t5}`, with signs.
pub const T45_WORDS: [(i64, &str); 4] =
    [(1, "x1 X2 X1 X2 x1 x2"), (-1, "x1 X2"), (1, "X2^2 x1^2 x2 X1"), (-1, "X2 x1 X2 x1 x2 X1")];

fn parsed(text: &str) -> Polynomial {
    parse_polynomial(text).expect("built-in polynomial text parses")
}

fn p_minus_2t5() -> Polynomial {
    poly_p() - &Polynomial::t(5).scale(&crate::poly::int(2))
}

/// Brackets of the nine coordinates, stored once per unordered pair.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketTable {
    entries: BTreeMap<(i8, i8), Polynomial>,
}

fn slot(i: i8) -> usize {
    COORDINATES.iter().position(|&c| c == i).expect("coordinate index")
}

impl BracketTable {
    fn base() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((4, -4), normal_form(&p_minus_2t5()));
        entries.insert((4, 5), normal_form(&parsed(A45_TEXT)));
        entries.insert((-4, 5), normal_form(&parsed(AM45_TEXT)));
        BracketTable { entries }
    }

    /// `{t(i), t(j)}` for coordinates i, j.
    pub fn get(&self, i: i8, j: i8) -> Polynomial {
        if i == j {
            return Polynomial::zero();
        }
        let (a, b, sign) = if slot(i) < slot(j) { (i, j, false) } else { (j, i, true) };
        match self.entries.get(&(a, b)) {
            Some(p) if sign => -p,
            Some(p) => p.clone(),
            None => Polynomial::zero(),
        }
    }

    /// The nonzero entries `(i, j, {t(i), t(j)})` with `i` before `j`.
    pub fn nonzero(&self) -> impl Iterator<Item = (i8, i8, &Polynomial)> {
        self.entries.iter().map(|(&(i, j), p)| (i, j, p))
    }
}

/// The generator table.
pub fn base_table() -> &'static BracketTable {
    static CELL: OnceLock<BracketTable> = OnceLock::new();
    CELL.get_or_init(BracketTable::base)
}

/// `{f, g}` in normal form. Variables other than the nine coordinates are
/// treated as constants.
pub fn bracket(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (f, g) = (normal_form(f), normal_form(g));
    let table = base_table();
    let mut out = Polynomial::zero();
    for (i, j, c) in table.nonzero() {
        let (vi, vj) = (Variable::t(i), Variable::t(j));
        let cross = &(&f.partial(&vi) * &g.partial(&vj)) - &(&f.partial(&vj) * &g.partial(&vi));
        if !cross.is_zero() {
            out = &out + &(&cross * c);
        }
    }
    normal_form(&out)
}

/// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}` in normal form.
pub fn jacobi_residual(f: &Polynomial, g: &Polynomial, h: &Polynomial) -> Polynomial {
    let a = bracket(f, &bracket(g, h));
    let b = bracket(g, &bracket(h, f));
    let c = bracket(h, &bracket(f, g));
    normal_form(&(&(&a + &b) + &c))
}

/// One named consistency check; it passes when the residual is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonCheck {
    pub name: String,
    pub residual: Polynomial,
}

impl PoissonCheck {
    fn new(name: &str, residual: Polynomial) -> Self {
        PoissonCheck { name: name.to_string(), residual: normal_form(&residual) }
    }

    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PoissonReport {
    pub checks: Vec<PoissonCheck>,
}

impl PoissonReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(PoissonCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PoissonCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// The printed `{t(±4), P}` and `{t(±4), Q}` against the Leibniz values, and
/// the cleared-denominator form of the t5 formula for both signs.
pub fn verify_t5_consistency() -> PoissonReport {
    let table = base_table();
    let d = p_minus_2t5();
    let t5 = Polynomial::t(5);
    let mut checks = Vec::new();
    for (k, sign) in [(4i8, 1i64), (-4, -1)] {
        let tk = Polynomial::t(k);
        let factor = d.scale(&crate::poly::int(sign));
        let (cross, cof) = if k == 4 {
            (&tk - &(&Polynomial::t(1) * &Polynomial::t(-2)), parsed(T4_Q_COFACTOR))
        } else {
            (&tk - &(&Polynomial::t(-1) * &Polynomial::t(2)), parsed(TM4_Q_COFACTOR))
        };
        let with_p = bracket(&tk, poly_p());
        let with_q = bracket(&tk, poly_q());
        checks.push(PoissonCheck::new(&format!("printed {{t{k},P}}"), &with_p - &(&factor * &cross)));
        checks.push(PoissonCheck::new(&format!("printed {{t{k},Q}}"), &with_q - &(&factor * &cof)));
        let lhs = &(&t5.scale(&crate::poly::int(2)) - poly_p()) * &table.get(k, 5);
        let rhs = &(&t5 * &with_p) - &with_q;
        checks.push(PoissonCheck::new(&format!("t5 formula for t{k}"), &lhs - &rhs));
    }
    PoissonReport { checks }
}

/// Coefficients of the bivector on `(t4, t-4, t5)`; entry `[a][b]` is the
/// coefficient of `∂a ∧ ∂b`.
pub fn bivector() -> [[Polynomial; 3]; 3] {
    let a45 = base_table().get(4, 5);
    let mirrored = normal_form(&-apply_dihedral(DihedralElement::Mirror, &a45));
    let upper = [(0, 1, normal_form(&p_minus_2t5())), (0, 2, a45), (1, 2, mirrored)];
    let mut m: [[Polynomial; 3]; 3] = Default::default();
    for (a, b, c) in upper {
        m[b][a] = -&c;
        m[a][b] = c;
    }
    m
}

/// The four-word alternating sum for `{t4, t5}`, reduced to generators.
pub fn word_sum() -> Result<Polynomial, PoissonError> {
    let mut total = Polynomial::zero();
    for (sign, text) in T45_WORDS {
        let w: Word = text.parse().map_err(TraceError::from)?;
        total = &total + &reduce_trace_word(&w)?.scale(&crate::poly::int(sign));
    }
    Ok(normal_form(&total))
}

pub fn word_sum_check() -> Result<PoissonReport, PoissonError> {
    let sum = word_sum()?;
    Ok(PoissonReport { checks: vec![PoissonCheck::new("word sum equals {t4,t5}", &sum - &base_table().get(4, 5))] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn table_basics() {
        let t = base_table();
        assert!(t.get(1, 4).is_zero());
        assert_eq!(t.get(4, -4), normal_form(&p_minus_2t5()));
        assert_eq!(t.get(-4, 4), -normal_form(&p_minus_2t5()));
        assert!(t.get(5, 5).is_zero());
        for i in [1, -1, 2, -2, 3, -3] {
            for j in COORDINATES {
                assert!(t.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn identity_point_vanishes() {
        // every generator trace is 3 at the identity pair
        for (i, j, c) in base_table().nonzero() {
            assert_eq!(t_eval(c, |_| 3), crate::poly::int(0), "{{t{i},t{j}}}");
        }
    }

    fn t_eval(f: &Polynomial, v: impl Fn(i8) -> i64) -> crate::poly::Rational {
        f.eval(|var| match var {
            Variable::T(i) => Some(crate::poly::int(v(*i))),
            _ => None,
        })
        .unwrap()
    }

    #[test]
    fn printed_p_brackets() {
        let expected = &p_minus_2t5() * &p("t4 - t1*t-2");
        assert_eq!(bracket(&Polynomial::t(4), poly_p()), normal_form(&expected));
        let expected = &(-p_minus_2t5()) * &p("t-4 - t-1*t2");
        assert_eq!(bracket(&Polynomial::t(-4), poly_p()), normal_form(&expected));
    }

    #[test]
    fn consistency_report() {
        let r = verify_t5_consistency();
        for c in &r.checks {
            assert!(c.passed(), "{}: {}", c.name, c.residual);
        }
        assert_eq!(r.checks.len(), 6);
    }

    #[test]
    fn jacobi_on_the_interesting_triple() {
        let r = jacobi_residual(&Polynomial::t(4), &Polynomial::t(-4), &Polynomial::t(5));
        assert!(r.is_zero(), "{r}");
        assert!(jacobi_residual(&Polynomial::t(1), &Polynomial::t(2), &Polynomial::t(3)).is_zero());
    }

    #[test]
    fn bivector_mirror_matches_table() {
        let b = bivector();
        assert_eq!(b[1][2], base_table().get(-4, 5));
        assert_eq!(b[0][1], base_table().get(4, -4));
        for (k, row) in b.iter().enumerate() {
            assert!(row[k].is_zero());
        }
    }

    #[test]
    fn t_minus5_is_eliminated() {
        let direct = bracket(&Polynomial::t(4), &Polynomial::t(-5));
        let via_p = bracket(&Polynomial::t(4), &(poly_p() - &Polynomial::t(5)));
        assert_eq!(direct, via_p);
    }

    #[test]
    fn four_words_sum_to_the_table_entry() {
        let r = word_sum_check().unwrap();
        assert!(r.passed(), "{}", r.checks[0].residual);
    }

    #[test]
    fn all_generator_triples_satisfy_jacobi() {
        for a in 0..9 {
            for b in a + 1..9 {
                for c in b + 1..9 {
                    let t = |k: usize| Polynomial::t(COORDINATES[k]);
                    assert!(jacobi_residual(&t(a), &t(b), &t(c)).is_zero());
                }
            }
        }
    }
}
