//! Recovering a trace polynomial from exact samples.
//!
//! An invariant function of a matrix pair is written as an unknown
//! combination of monomials `m` and `m * t5`, with `m` running over products
//! of the eight R-generators. Sampling random exact SL(3,Q) pairs gives a
//! rational linear system; the solution is then checked on a separate batch
//! of pairs before it is accepted.

use super::TraceError;
use crate::linalg::{solve, LinalgError};
use crate::matrix::{sample_sl3q, RepPair};
use crate::poly::{int, Monomial, Polynomial, Rational, Variable};
use crate::ring::{generator_bidegree, normal_form, pi_map, GeneratorPoint};
use crate::word::Word;

/// Total degree bounds tried in turn by [`reduce_by_interpolation`].
pub const DEGREE_SCHEDULE: [u32; 3] = [2, 4, 6];

const HELD_OUT_OFFSET: u64 = 1_000_000;
const RETRY_STRIDE: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpolationConfig {
    pub seed: u64,
    /// Generator factors per sampled matrix.
    pub n_factors: usize,
    /// Sample rows beyond the number of unknowns.
    pub extra_rows: usize,
    pub max_attempts: u32,
}

impl Default for InterpolationConfig {
    fn default() -> Self {
        InterpolationConfig { seed: 17, n_factors: 6, extra_rows: 4, max_attempts: 3 }
    }
}

/// Which monomials may appear.
#[derive(Clone, Copy, Debug)]
enum Shape {
    /// Bidegree at most this, with equal residues mod 3.
    Capped((u32, u32)),
    /// Only the Z3 x Z3 weight is constrained.
    Weight((u8, u8)),
}

impl Shape {
    fn admits(self, d: (u32, u32)) -> bool {
        match self {
            Shape::Capped(cap) => d.0 <= cap.0 && d.1 <= cap.1 && d.0 % 3 == cap.0 % 3 && d.1 % 3 == cap.1 % 3,
            Shape::Weight(w) => (d.0 % 3) as u8 == w.0 && (d.1 % 3) as u8 == w.1,
        }
    }
}

fn r_monomials(bound: u32) -> Vec<(Monomial, (u32, u32))> {
    fn go(k: usize, left: u32, acc: &mut Vec<(Variable, u32)>, d: (u32, u32), out: &mut Vec<(Monomial, (u32, u32))>) {
        if k == Variable::R_GENERATORS.len() {
            out.push((Monomial::from_factors(acc.iter().cloned()), d));
            return;
        }
        let i = Variable::R_GENERATORS[k];
        let g = generator_bidegree(i);
        for e in 0..=left {
            if e > 0 {
                acc.push((Variable::t(i), e));
            }
            go(k + 1, left - e, acc, (d.0 + e * g.0, d.1 + e * g.1), out);
            if e > 0 {
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, bound, &mut Vec::new(), (0, 0), &mut out);
    out
}

fn basis(bound: u32, shape: Shape) -> Vec<Monomial> {
    let t5 = Monomial::var(Variable::t(5));
    let (d5a, d5b) = generator_bidegree(5);
    let mut out = Vec::new();
    for (m, d) in r_monomials(bound) {
        if shape.admits(d) {
            out.push(m.clone());
        }
        if m.degree() < bound && shape.admits((d.0 + d5a, d.1 + d5b)) {
            out.push(m.mul(&t5));
        }
    }
    out
}

fn monomial_value(m: &Monomial, pt: &GeneratorPoint<Rational>) -> Rational {
    m.factors().iter().fold(int(1), |acc, (v, e)| {
        let x = pt.value(v).expect("basis monomials use generator variables");
        acc * num_traits::pow(x, *e as usize)
    })
}

fn sample(seed: u64, config: &InterpolationConfig) -> Result<RepPair<Rational>, TraceError> {
    Ok(sample_sl3q(seed, config.n_factors)?)
}

fn fit_with_basis<F>(f: &F, monomials: &[Monomial], bound: u32, config: &InterpolationConfig) -> Result<Polynomial, TraceError>
where
    F: Fn(&RepPair<Rational>) -> Result<Rational, TraceError>,
{
    let rows = monomials.len() + config.extra_rows;
    let mut solution = None;
    for attempt in 0..config.max_attempts.max(1) {
        let base = config.seed + u64::from(attempt) * RETRY_STRIDE;
        let mut a = Vec::with_capacity(rows);
        let mut b = Vec::with_capacity(rows);
        for k in 0..rows as u64 {
            let pair = sample(base + k, config)?;
            let pt = pi_map(&pair)?;
            a.push(monomials.iter().map(|m| monomial_value(m, &pt)).collect::<Vec<_>>());
            b.push(f(&pair)?);
        }
        match solve(&a, &b) {
            Ok(x) => {
                solution = Some(x);
                break;
            }
            Err(LinalgError::Underdetermined { .. }) => continue,
            Err(LinalgError::Inconsistent) => return Err(TraceError::BasisInsufficient(bound)),
            Err(e) => return Err(e.into()),
        }
    }
    let x = solution.ok_or(TraceError::RankDeficient)?;
    let mut poly = Polynomial::zero();
    for (m, c) in monomials.iter().zip(x) {
        poly.add_term(m.clone(), c);
    }
    // certify on pairs never used in the fit
    let held_out = 2 * monomials.len().max(1);
    for k in 0..held_out as u64 {
        let pair = sample(config.seed + HELD_OUT_OFFSET + k, config)?;
        let pt = pi_map(&pair)?;
        if pt.eval(&poly)? != f(&pair)? {
            return Err(TraceError::BasisInsufficient(bound));
        }
    }
    Ok(poly)
}

/// Interpolate an invariant function of a pair as a polynomial of total
/// degree at most `bound` whose monomials have Z3 x Z3 weight `weight`.
pub fn interpolate_invariant<F>(f: F, weight: (u8, u8), bound: u32, config: &InterpolationConfig) -> Result<Polynomial, TraceError>
where
    F: Fn(&RepPair<Rational>) -> Result<Rational, TraceError>,
{
    fit_with_basis(&f, &basis(bound, Shape::Weight(weight)), bound, config)
}

/// `tr(w)` by interpolation at one degree bound, with the basis pruned to
/// monomials whose bidegree fits under the word's.
pub fn reduce_by_interpolation_with(w: &Word, bound: u32, config: &InterpolationConfig) -> Result<Polynomial, TraceError> {
    let w = if w.rank() == 2 { w.clone() } else { Word::new(2, w.letters().to_vec())? };
    let cap = w.bidegree()?;
    let f = |pair: &RepPair<Rational>| Ok(pair.trace_word(&w)?);
    fit_with_basis(&f, &basis(bound, Shape::Capped(cap)), bound, config).map(|p| normal_form(&p))
}

/// `tr(w)` by interpolation over [`DEGREE_SCHEDULE`]. If no pruned basis
/// works the weight-only basis is tried at each bound.
pub fn reduce_by_interpolation(w: &Word) -> Result<Polynomial, TraceError> {
    if w.rank() > 2 {
        return Err(TraceError::RankUnsupported(w.rank()));
    }
    let config = InterpolationConfig::default();
    let mut last = TraceError::BasisInsufficient(DEGREE_SCHEDULE[DEGREE_SCHEDULE.len() - 1]);
    for bound in DEGREE_SCHEDULE {
        match reduce_by_interpolation_with(w, bound, &config) {
            Ok(p) => return Ok(p),
            Err(e @ (TraceError::BasisInsufficient(_) | TraceError::RankDeficient)) => last = e,
            Err(e) => return Err(e),
        }
    }
    let w2 = Word::new(2, w.letters().to_vec())?;
    let weight = w2.z3_weight()?;
    for bound in DEGREE_SCHEDULE {
        let f = |pair: &RepPair<Rational>| Ok(pair.trace_word(&w2)?);
        match interpolate_invariant(f, weight, bound, &config) {
            Ok(p) => return Ok(normal_form(&p)),
            Err(e @ (TraceError::BasisInsufficient(_) | TraceError::RankDeficient)) => last = e,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::reduce_with_rules;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn basis_respects_caps() {
        let b = basis(2, Shape::Capped((2, 0)));
        let names: Vec<String> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(b.len(), 2, "{names:?}");
    }

    #[test]
    fn agrees_with_rewriting() {
        for s in ["x1^2", "x1 x2 x1 x2", "X2 x1 x2 X1", "x1 X2 x1 x2", "x1^2 x2"] {
            let word = w(s);
            assert_eq!(reduce_by_interpolation(&word).unwrap(), reduce_with_rules(&word).unwrap(), "{s}");
        }
    }

    #[test]
    fn too_small_a_bound_is_reported() {
        let r = reduce_by_interpolation_with(&w("X1 x2 x1 x2"), 2, &InterpolationConfig::default());
        assert!(matches!(r, Err(TraceError::BasisInsufficient(2))), "{r:?}");
    }

    #[test]
    fn general_invariant() {
        // a product of traces rather than a single trace
        let f = |pair: &RepPair<Rational>| Ok(pair.trace_word(&w("x1"))? * pair.trace_word(&w("X1"))?);
        let p = interpolate_invariant(f, (0, 0), 2, &InterpolationConfig::default()).unwrap();
        assert_eq!(p, "t1*t-1".parse().unwrap());
    }
}
