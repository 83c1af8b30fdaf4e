//! Convex RP²-structures on the three-holed sphere: boundary conditions,
//! boundary eigenvalues and the closed-form fiber coordinates t(±4).
//!
//! Boundary traces are real. The fiber formulas are sums of monomials in
//! `s, t, √λ1, √λ2, √λ3` (all with half-integer exponents) times
//! `t(1), t(2), t(-3)`; they are stored as a term table and evaluated either
//! in floating point or, when the square roots are rational, exactly.

use thiserror::Error;

use crate::poly::{int, ComplexF, NonFiniteError, PolyError, Rational, Scalar};
use crate::ring::{poly_p, poly_q, GeneratorPoint};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Rp2Error {
    #[error("boundary {index} with traces ({x}, {y}) is not a real hyperbolic class")]
    InvalidBoundary { index: usize, x: f64, y: f64 },
    #[error("root finding failed for ({0}, {1})")]
    RootFindingFailure(f64, f64),
    #[error("fiber formula needs positive eigenvalues and parameters: {0}")]
    DomainError(String),
    #[error(transparent)]
    NonFinite(#[from] NonFiniteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `x²y² − 4(x³ + y³) + 18xy − 27`.
pub fn discriminant<S: Scalar>(x: &S, y: &S) -> S {
    let c = |n: i64| S::from_i64(n);
    let xy = x.times(y);
    let cubes = x.pow(3).plus(&y.pow(3));
    xy.times(&xy).minus(&c(4).times(&cubes)).plus(&c(18).times(&xy)).minus(&c(27))
}

pub fn discriminant_f64(x: f64, y: f64) -> f64 {
    x * x * y * y - 4.0 * (x.powi(3) + y.powi(3)) + 18.0 * x * y - 27.0
}

/// Traces `(t(i), t(-i))` of the three boundary curves.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryData {
    pub pairs: [(f64, f64); 3],
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberParams {
    pub s: f64,
    pub t: f64,
}

/// Positive traces and positive discriminant; zero is invalid.
pub fn boundary_pair_valid(x: f64, y: f64) -> bool {
    x > 0.0 && y > 0.0 && discriminant_f64(x, y) > 0.0
}

pub fn boundary_valid(b: &BoundaryData) -> [bool; 3] {
    b.pairs.map(|(x, y)| boundary_pair_valid(x, y))
}

fn cubic(x: f64, y: f64, l: f64) -> f64 {
    ((l - x) * l + y) * l - 1.0
}

/// Largest root of `λ³ − xλ² + yλ − 1`.
pub fn largest_eigenvalue(x: f64, y: f64) -> Result<f64, Rp2Error> {
    if !boundary_pair_valid(x, y) {
        return Err(Rp2Error::InvalidBoundary { index: 0, x, y });
    }
    // three distinct real roots, so the cubic has two critical points and
    // the largest root lies right of the larger one
    let crit = (x + (x * x - 3.0 * y).sqrt()) / 3.0;
    let mut lo = crit;
    let mut hi = 1.0 + x.abs().max(y.abs()).max(1.0);
    if !(cubic(x, y, lo) <= 0.0 && cubic(x, y, hi) > 0.0) {
        return Err(Rp2Error::RootFindingFailure(x, y));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if cubic(x, y, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-13 * hi {
            break;
        }
    }
    let mut l = 0.5 * (lo + hi);
    for _ in 0..3 {
        let d = (3.0 * l - 2.0 * x) * l + y;
        if d == 0.0 {
            break;
        }
        let next = l - cubic(x, y, l) / d;
        if !(next.is_finite() && (next - l).abs() <= 1e-6 * l) {
            break;
        }
        l = next;
    }
    Ok(l)
}

/// All three roots, largest first.
pub fn eigenvalues(x: f64, y: f64) -> Result<[f64; 3], Rp2Error> {
    let l1 = largest_eigenvalue(x, y)?;
    // deflate: λ² + (l1 − x)λ + 1/l1
    let b = l1 - x;
    let c = 1.0 / l1;
    let disc = b * b - 4.0 * c;
    if disc < 0.0 {
        return Err(Rp2Error::RootFindingFailure(x, y));
    }
    let r = disc.sqrt();
    // avoid cancellation in the smaller root
    let q = -0.5 * (b + b.signum() * r);
    let (a, z) = (q, c / q);
    Ok(if a >= z { [l1, a, z] } else { [l1, z, a] })
}

/// One term of a fiber formula. Exponents of `s, t, λ1, λ2, λ3` are in
/// halves; `traces` are exponents of `t(1), t(2), t(-3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiberTerm {
    pub coeff: i64,
    pub s: i32,
    pub t: i32,
    pub lam: [i32; 3],
    pub traces: [u32; 3],
}

const fn ft(coeff: i64, s: i32, t: i32, lam: [i32; 3], traces: [u32; 3]) -> FiberTerm {
    FiberTerm { coeff, s, t, lam, traces }
}

const N: [u32; 3] = [0, 0, 0];
const T1: [u32; 3] = [1, 0, 0];
const T2: [u32; 3] = [0, 1, 0];
const TM3: [u32; 3] = [0, 0, 1];
const T1T2: [u32; 3] = [1, 1, 0];
const T1TM3: [u32; 3] = [1, 0, 1];

pub const T4_TERMS: [FiberTerm; 32] = [
    ft(1, -2, 0, [-1, -1, -1], N),
    ft(1, -2, 0, [1, 1, 1], N),
    ft(-1, 2, 0, [3, 1, -1], N),
    ft(-1, 2, 0, [-1, 3, 1], N),
    ft(-1, 2, 0, [1, -1, 3], N),
    ft(2, 4, 0, [0, 0, 0], N),
    ft(-1, 0, -2, [2, -2, 0], N),
    ft(-1, 0, -2, [-2, 0, 2], N),
    ft(1, -2, -2, [-1, -1, -1], N),
    ft(1, 2, -2, [-3, 1, -1], N),
    ft(1, 2, -2, [-1, -3, 1], N),
    ft(1, 2, -2, [1, -1, 3], N),
    ft(-1, 4, -2, [0, 0, 0], N),
    ft(-1, 4, -2, [-2, -2, 4], N),
    ft(1, 6, -2, [-3, -1, 1], N),
    ft(-1, 0, 2, [2, 4, 0], N),
    ft(1, -2, 2, [1, 1, 1], N),
    ft(1, 2, 2, [3, 1, -1], N),
    ft(1, 0, 0, [0, -2, 0], T1),
    ft(-1, 0, 0, [0, 4, 0], T1),
    ft(1, 2, 0, [1, 1, -1], T1),
    ft(1, 0, -2, [0, -2, 0], T1),
    ft(-1, 2, -2, [-1, -1, 3], T1),
    ft(1, 4, -2, [-2, 0, 0], T1),
    ft(1, 2, 0, [-1, 1, 1], T2),
    ft(1, 0, 2, [2, 2, 0], T2),
    ft(1, 0, 0, [0, 2, 0], T1T2),
    ft(1, 2, 0, [1, -1, 1], TM3),
    ft(1, 0, -2, [-2, 0, 0], TM3),
    ft(-1, 2, -2, [1, -1, 1], TM3),
    ft(1, 4, -2, [-2, -2, 2], TM3),
    ft(1, 2, -2, [-1, -1, 1], T1TM3),
];

pub const TM4_TERMS: [FiberTerm; 32] = [
    ft(2, -4, 0, [0, 0, 0], N),
    ft(-1, -2, 0, [1, 3, -1], N),
    ft(-1, -2, 0, [3, -1, 1], N),
    ft(-1, -2, 0, [-1, 1, 3], N),
    ft(1, 2, 0, [-1, -1, -1], N),
    ft(1, 2, 0, [1, 1, 1], N),
    ft(1, 0, -2, [-2, 2, 0], N),
    ft(1, 0, -2, [0, -2, 2], N),
    ft(1, 0, -2, [2, 0, 4], N),
    ft(1, -4, -2, [0, 0, 0], N),
    ft(-1, -2, -2, [3, -1, 1], N),
    ft(-1, -2, -2, [-1, 1, 3], N),
    ft(-1, 2, -2, [1, 1, 1], N),
    ft(-1, 2, -2, [-1, -1, 5], N),
    ft(1, 4, -2, [-2, 0, 2], N),
    ft(1, 0, 2, [2, 0, -2], N),
    ft(1, -4, 2, [0, 0, 0], N),
    ft(-1, -2, 2, [1, 3, -1], N),
    ft(1, -2, 0, [1, -1, 1], T1),
    ft(-1, 0, -2, [0, 0, 4], T1),
    ft(1, -2, -2, [1, -1, 1], T1),
    ft(1, 2, -2, [-1, 1, 1], T1),
    ft(1, 0, 0, [-2, 0, 0], T2),
    ft(-1, 0, 0, [4, 0, 0], T2),
    ft(1, -2, 0, [1, 1, -1], T2),
    ft(1, -2, 2, [1, 1, -1], T2),
    ft(1, 0, 0, [2, 0, 0], T1T2),
    ft(1, -2, 0, [-1, 1, 1], TM3),
    ft(-1, 0, -2, [2, 0, 2], TM3),
    ft(1, -2, -2, [-1, 1, 1], TM3),
    // printed with √(t λ1) in the denominator
    ft(1, 2, -1, [-1, -1, 3], TM3),
    ft(1, 0, -2, [0, 0, 2], T1TM3),
];

/// Inputs of the fiber formulas.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FiberInput {
    pub lam: [f64; 3],
    pub s: f64,
    pub t: f64,
    pub t1: f64,
    pub t2: f64,
    pub tm3: f64,
}

fn check_domain(inp: &FiberInput) -> Result<(), Rp2Error> {
    if inp.lam.iter().any(|&l| !(l > 0.0)) {
        return Err(Rp2Error::DomainError(format!("eigenvalues {:?}", inp.lam)));
    }
    if !(inp.s > 0.0 && inp.t > 0.0) {
        return Err(Rp2Error::DomainError(format!("s = {}, t = {}", inp.s, inp.t)));
    }
    Ok(())
}

/// Float evaluation of a term table, summed in table order.
pub fn eval_terms(terms: &[FiberTerm], inp: &FiberInput) -> Result<f64, Rp2Error> {
    check_domain(inp)?;
    let half = |x: f64, e: i32| x.sqrt().powi(e);
    let tr = [inp.t1, inp.t2, inp.tm3];
    let mut sum = 0.0;
    for term in terms {
        let mut v = term.coeff as f64 * half(inp.s, term.s) * half(inp.t, term.t);
        for k in 0..3 {
            v *= half(inp.lam[k], term.lam[k]) * tr[k].powi(term.traces[k] as i32);
        }
        sum += v;
    }
    Ok(sum)
}

/// Exact evaluation when `√λk`, `√s` and `√t` are rational.
pub fn eval_terms_exact(
    terms: &[FiberTerm],
    sqrt_lam: &[Rational; 3],
    sqrt_s: &Rational,
    sqrt_t: &Rational,
    traces: &[Rational; 3],
) -> Result<Rational, Rp2Error> {
    let positive = |q: &Rational| q > &int(0);
    if !(sqrt_lam.iter().all(positive) && positive(sqrt_s) && positive(sqrt_t)) {
        return Err(Rp2Error::DomainError("square roots must be positive".into()));
    }
    let pw = |q: &Rational, e: i32| num_traits::pow::Pow::pow(q, e);
    let mut sum = int(0);
    for term in terms {
        let mut v = int(term.coeff) * pw(sqrt_s, term.s) * pw(sqrt_t, term.t);
        for k in 0..3 {
            v = v * pw(&sqrt_lam[k], term.lam[k]) * num_traits::pow(traces[k].clone(), term.traces[k] as usize);
        }
        sum += v;
    }
    Ok(sum)
}

pub fn fiber_t4(inp: &FiberInput) -> Result<f64, Rp2Error> {
    eval_terms(&T4_TERMS, inp)
}

pub fn fiber_tm4(inp: &FiberInput) -> Result<f64, Rp2Error> {
    eval_terms(&TM4_TERMS, inp)
}

/// A fiber point: the eight R-values and the two t5 roots over them.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberPoint {
    pub lam: [f64; 3],
    /// In `R_GENERATORS` order.
    pub r: [f64; 8],
    pub p: f64,
    pub q: f64,
    /// `P² − 4Q`.
    pub t5_discriminant: f64,
    pub points: (GeneratorPoint<ComplexF>, GeneratorPoint<ComplexF>),
}

impl FiberPoint {
    pub fn t5_roots(&self) -> (ComplexF, ComplexF) {
        (*self.points.0.t(5), *self.points.1.t(5))
    }
}

pub fn fiber_point(b: &BoundaryData, params: &FiberParams) -> Result<FiberPoint, Rp2Error> {
    for (index, &(x, y)) in b.pairs.iter().enumerate() {
        if !boundary_pair_valid(x, y) {
            return Err(Rp2Error::InvalidBoundary { index: index + 1, x, y });
        }
    }
    let mut lam = [0.0; 3];
    for (k, &(x, y)) in b.pairs.iter().enumerate() {
        lam[k] = largest_eigenvalue(x, y)?;
    }
    let [(t1, tm1), (t2, tm2), (t3, tm3)] = b.pairs;
    let inp = FiberInput { lam, s: params.s, t: params.t, t1, t2, tm3 };
    let t4 = fiber_t4(&inp)?;
    let tm4 = fiber_tm4(&inp)?;
    let r = [t1, tm1, t2, tm2, t3, tm3, t4, tm4];
    let mut rc: [ComplexF; 8] = std::array::from_fn(|_| ComplexF::scalar_zero());
    for (slot, v) in rc.iter_mut().zip(r) {
        *slot = ComplexF::real(v)?;
    }
    let base = GeneratorPoint::new(rc, ComplexF::scalar_zero())?;
    let p = base.eval(poly_p())?;
    let q = base.eval(poly_q())?;
    let disc = p.times(&p).minus(&q.times(&ComplexF::from_i64(4)));
    let root = disc.sqrt();
    let half = ComplexF::real(0.5)?;
    let plus = p.plus(&root).times(&half);
    let minus = p.minus(&root).times(&half);
    let points = (
        GeneratorPoint::with_t_minus5(rc, plus, minus),
        GeneratorPoint::with_t_minus5(rc, minus, plus),
    );
    Ok(FiberPoint { lam, r, p: p.re(), q: q.re(), t5_discriminant: disc.re(), points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::ring::sextic;
    use num_traits::ToPrimitive;

    #[test]
    fn discriminant_values() {
        assert_eq!(discriminant(&int(3), &int(3)), int(0));
        assert_eq!(discriminant(&rat(31, 6), &rat(41, 6)), rat(34969, 1296));
        assert_eq!(discriminant(&int(1), &int(2)), int(-23));
        assert_eq!(discriminant(&int(2), &int(1)), int(-23));
        // product of squared eigenvalue differences for (2, 3, 1/6)
        let (a, b, c) = (int(2), int(3), rat(1, 6));
        let prod = num_traits::pow((&a - &b) * (&a - &c) * (&b - &c), 2);
        assert_eq!(discriminant(&rat(31, 6), &rat(41, 6)), prod);
    }

    #[test]
    fn validity() {
        assert!(!boundary_pair_valid(3.0, 3.0));
        assert!(boundary_pair_valid(31.0 / 6.0, 41.0 / 6.0));
        assert!(!boundary_pair_valid(-1.0, 5.0));
        assert!(matches!(largest_eigenvalue(3.0, 3.0), Err(Rp2Error::InvalidBoundary { .. })));
    }

    #[test]
    fn eigenvalues_recovered() {
        let l = eigenvalues(31.0 / 6.0, 41.0 / 6.0).unwrap();
        for (got, want) in l.iter().zip([3.0, 2.0, 1.0 / 6.0]) {
            assert!((got - want).abs() < 1e-10, "{l:?}");
        }
        assert!((l.iter().product::<f64>() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn float_and_exact_paths_agree() {
        // λ = (4, 9, 1/36), s = 1/4, t = 9/4 have rational square roots
        let sl = [int(2), int(3), rat(1, 6)];
        let traces = [rat(31, 6), rat(7, 2), rat(5, 3)];
        let inp = FiberInput { lam: [4.0, 9.0, 1.0 / 36.0], s: 0.25, t: 2.25, t1: 31.0 / 6.0, t2: 3.5, tm3: 5.0 / 3.0 };
        for terms in [&T4_TERMS[..], &TM4_TERMS[..]] {
            let exact = eval_terms_exact(terms, &sl, &rat(1, 2), &rat(3, 2), &traces).unwrap();
            let float = eval_terms(terms, &inp).unwrap();
            let e = exact.to_f64().unwrap();
            assert!((e - float).abs() <= 1e-9 * e.abs().max(1.0), "{e} vs {float}");
        }
    }

    #[test]
    fn domain_errors() {
        let inp = FiberInput { lam: [1.0, 0.0, 1.0], s: 1.0, t: 1.0, t1: 3.0, t2: 3.0, tm3: 3.0 };
        assert!(matches!(fiber_t4(&inp), Err(Rp2Error::DomainError(_))));
        let inp = FiberInput { lam: [1.0; 3], s: -1.0, t: 1.0, t1: 3.0, t2: 3.0, tm3: 3.0 };
        assert!(matches!(fiber_tm4(&inp), Err(Rp2Error::DomainError(_))));
    }

    #[test]
    fn fiber_point_roots_satisfy_sextic() {
        let b = BoundaryData { pairs: [(31.0 / 6.0, 41.0 / 6.0), (7.0, 8.0), (6.0, 6.5)] };
        for s in [0.5, 1.0, 2.0] {
            for t in [0.5, 1.0, 2.0] {
                let fp = fiber_point(&b, &FiberParams { s, t }).unwrap();
                assert!(fp.r.iter().all(|v| v.is_finite()));
                for pt in [&fp.points.0, &fp.points.1] {
                    let v = pt.eval(sextic()).unwrap();
                    let scale = fp.p.abs().powi(2).max(fp.q.abs()).max(1.0);
                    assert!(v.abs() <= 1e-9 * scale, "{v} at s={s}, t={t}");
                }
            }
        }
        let bad = BoundaryData { pairs: [(3.0, 3.0), (7.0, 8.0), (6.0, 6.5)] };
        assert!(matches!(fiber_point(&bad, &FiberParams { s: 1.0, t: 1.0 }), Err(Rp2Error::InvalidBoundary { index: 1, .. })));
    }
}
