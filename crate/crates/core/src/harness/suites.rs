//! The named checks. Exact checks compare rationals or polynomials for
//! equality and never read the tolerance; float checks do.

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::corpus::reduction_corpus;
use super::{CheckResult, Failure, RunConfig};
use crate::matrix::{family_ac, family_diag, pair_rho1_rho2, sample_sl3q, RepPair, DEFAULT_FACTORS};
use crate::poisson::{base_table, bivector, bracket, word_sum_check, jacobi_residual, verify_t5_consistency, COORDINATES};
use crate::poly::{int, rat, ComplexF, Monomial, Polynomial, Rational, Scalar, Variable};
use crate::ring::{
    ac_family_expected, apply_dihedral, is_homogeneous, jacobian_generators, lambda_det, lambda_factorization,
    normal_form, partials_p, partials_q, pi_map, poly_p, poly_q, sextic, sl2_substitute, small_p, small_q,
    symmetrizer, DihedralElement, PRINTED_CAYLEY,
};
use crate::rp2::{discriminant, eigenvalues, fiber_point, BoundaryData, FiberParams};
use crate::trace::{catalog, reduce_trace_word, residual_on_pair};

type Runner = Box<dyn Fn(&RunConfig) -> CheckResult + Send + Sync>;

pub struct Check {
    pub name: String,
    pub run: Runner,
}

impl Check {
    fn new(name: impl Into<String>, run: impl Fn(&RunConfig) -> CheckResult + Send + Sync + 'static) -> Self {
        Check { name: name.into(), run: Box::new(run) }
    }
}

/// Accumulates sample outcomes for one check.
struct Tally {
    samples: usize,
    failures: Vec<Failure>,
}

impl Tally {
    fn new() -> Self {
        Tally { samples: 0, failures: Vec::new() }
    }

    fn record(&mut self, seed: u64, outcome: Result<(), String>) {
        self.samples += 1;
        if let Err(detail) = outcome {
            self.failures.push(Failure { seed, detail });
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult { name: String::new(), samples: self.samples, failures: self.failures, elapsed: Duration::ZERO }
    }
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn zero_poly(label: &str, p: &Polynomial) -> Result<(), String> {
    ensure(p.is_zero(), || format!("{label}: residual {p}"))
}

fn sample_pair(seed: u64) -> Result<RepPair<Rational>, String> {
    sample_sl3q(seed, DEFAULT_FACTORS).map_err(|e| e.to_string())
}

// Seed offsets keep the sample streams of different checks disjoint.
const LAMBDA_OFFSET: u64 = 1 << 20;
const HELD_OUT_OFFSET: u64 = 1 << 24;
const DIAGONAL_OFFSET: u64 = 1 << 28;
const POISSON_OFFSET: u64 = 1 << 32;

/// Six-factor products leave about 8% of pairs reducible, where P1 vanishes;
/// the genericity count draws longer products.
const GENERIC_FACTORS: usize = 12;

/// A random polynomial in the nine coordinates with small integer
/// coefficients, `terms` monomials of total degree at most `max_degree`.
pub fn random_polynomial<R: Rng>(rng: &mut R, terms: usize, max_degree: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for _ in 0..terms {
        let degree = rng.random_range(0..=max_degree);
        let factors: Vec<_> = (0..degree).map(|_| (Variable::t(COORDINATES[rng.random_range(0..COORDINATES.len())]), 1)).collect();
        let mut c = 0i64;
        while c == 0 {
            c = rng.random_range(-5..=5);
        }
        out.add_term(Monomial::from_factors(factors), int(c));
    }
    out
}

fn catalog_checks() -> Vec<Check> {
    catalog()
        .iter()
        .map(|record| {
            let id = record.name;
            Check::new(format!("catalog.{}", id.as_str()), move |cfg| {
                let mut tally = Tally::new();
                for k in 0..cfg.samples as u64 {
                    let seed = cfg.seed.wrapping_add(k);
                    let outcome = sample_pair(seed).and_then(|pair| match residual_on_pair(id, &pair) {
                        Ok(r) if r.is_zero() => Ok(()),
                        Ok(r) => Err(format!("nonzero residual {:?}", r.scalars)),
                        Err(e) => Err(e.to_string()),
                    });
                    tally.record(seed, outcome);
                }
                tally.finish()
            })
        })
        .collect()
}

fn per_pair(name: &'static str, f: fn(&RepPair<Rational>) -> Result<(), String>) -> Check {
    Check::new(name, move |cfg| {
        let mut tally = Tally::new();
        for k in 0..cfg.samples as u64 {
            let seed = cfg.seed.wrapping_add(k);
            tally.record(seed, sample_pair(seed).and_then(|p| f(&p)));
        }
        tally.finish()
    })
}

fn kernel_sextic(pair: &RepPair<Rational>) -> Result<(), String> {
    let pt = pi_map(pair).map_err(|e| e.to_string())?;
    let v = pt.eval(sextic()).map_err(|e| e.to_string())?;
    ensure(v.vanishes(), || format!("sextic = {v}"))
}

fn kernel_p_sum(pair: &RepPair<Rational>) -> Result<(), String> {
    let pt = pi_map(pair).map_err(|e| e.to_string())?;
    let p = pt.eval(poly_p()).map_err(|e| e.to_string())?;
    let sum = pt.t(5) + pt.t(-5);
    ensure(sum == p, || format!("t5 + t-5 = {sum}, P = {p}"))
}

fn kernel_q_product(pair: &RepPair<Rational>) -> Result<(), String> {
    let pt = pi_map(pair).map_err(|e| e.to_string())?;
    let q = pt.eval(poly_q()).map_err(|e| e.to_string())?;
    let prod = pt.t(5) * pt.t(-5);
    ensure(prod == q, || format!("t5 * t-5 = {prod}, Q = {q}"))
}

fn kernel_lambda_det(pair: &RepPair<Rational>) -> Result<(), String> {
    let d = lambda_det(pair).map_err(|e| e.to_string())?;
    ensure(d.vanishes(), || format!("det = {d}"))
}

fn lambda_factorization_check(cfg: &RunConfig) -> CheckResult {
    let n = 2 * cfg.samples;
    let mut tally = Tally::new();
    let mut nonzero_p1 = 0usize;
    for k in 0..n as u64 {
        let seed = cfg.seed.wrapping_add(LAMBDA_OFFSET + k);
        let outcome = sample_sl3q(seed, GENERIC_FACTORS).map_err(|e| e.to_string()).and_then(|pair| {
            let pt = pi_map(&pair).map_err(|e| e.to_string())?;
            let f = lambda_factorization(&pt).map_err(|e| e.to_string())?;
            if !f.p1().vanishes() {
                nonzero_p1 += 1;
            }
            ensure(f.matches_sextic(), || format!("coefficients {:?} do not factor", f.coefficients))
        });
        tally.record(seed, outcome);
    }
    // genericity: P1 vanishes on at most 2.5% of the pairs
    let needed = n - n / 40;
    if nonzero_p1 < needed {
        tally.failures.push(Failure {
            seed: cfg.seed,
            detail: format!("P1 nonzero on {nonzero_p1} of {n} pairs, need {needed}"),
        });
    }
    tally.finish()
}

fn partials_check(printed: &'static std::collections::BTreeMap<i8, Polynomial>, target: &'static Polynomial) -> CheckResult {
    let mut tally = Tally::new();
    for i in Variable::R_GENERATORS {
        let formal = target.partial(&Variable::t(i));
        let outcome = match printed.get(&i) {
            Some(p) => zero_poly(&format!("d/dt{i}"), &(p - &formal)),
            None => Err(format!("no printed partial for t{i}")),
        };
        tally.record(i as u64, outcome);
    }
    tally.finish()
}

fn symmetrizer_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let sp = symmetrizer(small_p()).map_err(|e| e.to_string());
    tally.record(0, sp.and_then(|s| zero_poly("S(p) - 3 - P", &(&(&s - &Polynomial::from_int(3)) - poly_p()))));
    let sq = symmetrizer(small_q()).map_err(|e| e.to_string());
    tally.record(1, sq.and_then(|s| zero_poly("S(q) + 9 - Q", &(&(&s + &Polynomial::from_int(9)) - poly_q()))));
    tally.finish()
}

fn cayley_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    for (r, g) in DihedralElement::ALL.iter().enumerate() {
        for (c, h) in DihedralElement::ALL.iter().enumerate() {
            let got = g.compose(*h);
            let want = PRINTED_CAYLEY[r][c];
            tally.record((8 * r + c) as u64, ensure(got == want, || format!("{g} ∘ {h} = {got}, printed {want}")));
        }
    }
    tally.finish()
}

fn fixes_pq_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    for (k, g) in DihedralElement::ALL.iter().enumerate() {
        let dp = &apply_dihedral(*g, poly_p()) - poly_p();
        let dq = &apply_dihedral(*g, poly_q()) - poly_q();
        tally.record(k as u64, zero_poly(&format!("{g} on P"), &dp).and(zero_poly(&format!("{g} on Q"), &dq)));
    }
    tally.finish()
}

fn sl2_symbolic_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    for (k, g) in jacobian_generators().iter().enumerate() {
        tally.record(k as u64, zero_poly(&format!("generator {k}"), &sl2_substitute(g)));
    }
    tally.finish()
}

fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut n = 0i64;
    while n == 0 {
        n = rng.random_range(-12..=12);
    }
    rat(n, rng.random_range(1..=12))
}

const DIAGONAL_POINTS: usize = 50;

fn diagonal_check(cfg: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    for k in 0..DIAGONAL_POINTS as u64 {
        let seed = cfg.seed.wrapping_add(DIAGONAL_OFFSET + k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: [Rational; 4] = std::array::from_fn(|_| random_nonzero_rational(&mut rng));
        let outcome = family_diag(&v[0], &v[1], &v[2], &v[3]).map_err(|e| e.to_string()).and_then(|pair| {
            let pt = pi_map(&pair).map_err(|e| e.to_string())?;
            for (j, g) in jacobian_generators().iter().enumerate() {
                let x = pt.eval(g).map_err(|e| e.to_string())?;
                ensure(x.vanishes(), || format!("generator {j} = {x} at {v:?}"))?;
            }
            Ok(())
        });
        tally.record(seed, outcome);
    }
    tally.finish()
}

fn reduction_corpus_check(cfg: &RunConfig) -> CheckResult {
    let t5 = Variable::t(5);
    let tm5 = Variable::t(-5);
    let mut tally = Tally::new();
    let pairs: Vec<_> = (0..cfg.samples as u64)
        .map(|k| {
            let seed = cfg.seed.wrapping_add(HELD_OUT_OFFSET + k);
            (seed, sample_pair(seed).and_then(|p| Ok((pi_map(&p).map_err(|e| e.to_string())?, p))))
        })
        .collect();
    for w in reduction_corpus() {
        let expr = match reduce_trace_word(&w) {
            Ok(e) => e,
            Err(e) => {
                tally.record(cfg.seed, Err(format!("{w}: {e}")));
                continue;
            }
        };
        let shape = ensure(expr.degree_in(&t5) <= 1 && expr.degree_in(&tm5) == 0, || format!("{w}: not in normal form: {expr}"))
            .and_then(|_| {
                let want = w.z3_weight().map_err(|e| e.to_string())?;
                match is_homogeneous(&expr).map_err(|e| e.to_string())? {
                    Some(got) if expr.is_zero() || got == want => Ok(()),
                    other => Err(format!("{w}: weight {other:?}, word weight {want:?}")),
                }
            });
        if shape.is_err() {
            tally.record(cfg.seed, shape);
            continue;
        }
        for (seed, pair) in &pairs {
            let outcome = pair.as_ref().map_err(Clone::clone).and_then(|(pt, pair)| {
                let got = pt.eval(&expr).map_err(|e| e.to_string())?;
                let want = pair.trace_word(&w).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{w}: reduction gives {got}, trace is {want}"))
            });
            tally.record(*seed, outcome);
        }
    }
    tally.finish()
}

fn rp2_discriminant_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let d = discriminant(&int(3), &int(3));
    tally.record(0, ensure(d.vanishes(), || format!("d(3,3) = {d}")));
    let d = discriminant(&rat(31, 6), &rat(41, 6));
    tally.record(1, ensure(d == rat(34969, 1296), || format!("d(31/6,41/6) = {d}")));
    tally.finish()
}

/// All zero-tolerance checks.
pub fn exact_checks() -> Vec<Check> {
    let mut out = catalog_checks();
    out.push(per_pair("kernel.sextic", kernel_sextic));
    out.push(per_pair("kernel.p_sum", kernel_p_sum));
    out.push(per_pair("kernel.q_product", kernel_q_product));
    out.push(per_pair("kernel.lambda_det", kernel_lambda_det));
    out.push(Check::new("lambda.factorization", lambda_factorization_check));
    out.push(Check::new("transcription.partials_p", |_| partials_check(partials_p(), poly_p())));
    out.push(Check::new("transcription.partials_q", |_| partials_check(partials_q(), poly_q())));
    out.push(Check::new("symmetry.symmetrizer", symmetrizer_check));
    out.push(Check::new("symmetry.cayley", cayley_check));
    out.push(Check::new("symmetry.fixes_pq", fixes_pq_check));
    out.push(Check::new("singular.sl2_symbolic", sl2_symbolic_check));
    out.push(Check::new("singular.diagonal", diagonal_check));
    out.push(Check::new("reduction.corpus", reduction_corpus_check));
    out.push(Check::new("rp2.discriminant", rp2_discriminant_check));
    out
}

fn close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs().max(1.0)
}

fn rho_pair_check(cfg: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let outcome = (|| {
        let a = ComplexF::real(2.0).map_err(|e| e.to_string())?;
        let b = ComplexF::real(3.0).map_err(|e| e.to_string())?;
        let (r1, r2) = pair_rho1_rho2(a, b).map_err(|e| e.to_string())?;
        let p1 = pi_map(&r1).map_err(|e| e.to_string())?;
        let p2 = pi_map(&r2).map_err(|e| e.to_string())?;
        for i in Variable::R_GENERATORS {
            let (x, y) = (p1.t(i), p2.t(i));
            ensure((*x - *y).abs() <= cfg.tolerance * x.abs().max(1.0), || format!("t{i}: {x} vs {y}"))?;
        }
        let gap = (*p1.t(5) - *p2.t(5)).abs();
        ensure(gap > 1e-6, || format!("t5 values differ by only {gap}"))
    })();
    tally.record(cfg.seed, outcome);
    tally.finish()
}

fn family_ac_check(cfg: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let params = [(int(2), 2.0), (int(3), 3.0), (rat(1, 2), 0.5)];
    for (k, (a, af)) in params.iter().enumerate() {
        for c in [1i64, 2] {
            let outcome = family_ac(a, &int(c)).and_then(|p| p.to_complex()).map_err(|e| e.to_string()).and_then(|pair| {
                let pt = pi_map(&pair).map_err(|e| e.to_string())?;
                let (e1, em1) = ac_family_expected(*af);
                for (j, g) in jacobian_generators().iter().enumerate() {
                    let v = pt.eval(g).map_err(|e| e.to_string())?;
                    let ok = match j {
                        0 => close(v.re(), e1, cfg.tolerance) && v.im().abs() <= cfg.tolerance,
                        1 => close(v.re(), em1, cfg.tolerance) && v.im().abs() <= cfg.tolerance,
                        _ => v.abs() <= cfg.tolerance,
                    };
                    ensure(ok, || format!("a={a}, c={c}: generator {j} = {v}"))?;
                }
                Ok(())
            });
            tally.record((2 * k) as u64 + c as u64, outcome);
        }
    }
    tally.finish()
}

/// Two boundary datasets used by the fiber checks and fixtures.
pub(crate) const FIBER_BOUNDARIES: [[(f64, f64); 3]; 2] = [
    [(31.0 / 6.0, 41.0 / 6.0), (7.0, 8.0), (6.0, 6.5)],
    [(41.0 / 6.0, 31.0 / 6.0), (5.0, 6.0), (4.0, 4.5)],
];
pub(crate) const FIBER_GRID: [f64; 3] = [0.5, 1.0, 2.0];

fn rp2_check(cfg: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let roots = eigenvalues(31.0 / 6.0, 41.0 / 6.0).map_err(|e| e.to_string()).and_then(|l| {
        let ok = l.iter().zip([3.0, 2.0, 1.0 / 6.0]).all(|(g, w)| (g - w).abs() <= 1e-10);
        ensure(ok, || format!("eigenvalues {l:?}"))
    });
    tally.record(0, roots);
    for (k, pairs) in FIBER_BOUNDARIES.iter().enumerate() {
        let b = BoundaryData { pairs: *pairs };
        for s in FIBER_GRID {
            for t in FIBER_GRID {
                let outcome = fiber_point(&b, &FiberParams { s, t }).map_err(|e| e.to_string()).and_then(|fp| {
                    ensure(fp.r.iter().all(|v| v.is_finite()), || format!("non-finite values {:?}", fp.r))?;
                    let scale = fp.p.abs().powi(2).max(fp.q.abs()).max(1.0);
                    for pt in [&fp.points.0, &fp.points.1] {
                        let v = pt.eval(sextic()).map_err(|e| e.to_string())?;
                        ensure(v.abs() <= cfg.tolerance * scale, || format!("sextic = {v} at s={s}, t={t}"))?;
                    }
                    Ok(())
                });
                tally.record(k as u64 + 1, outcome);
            }
        }
    }
    tally.finish()
}

/// Checks in floating point; these use `RunConfig::tolerance`.
pub fn float_checks() -> Vec<Check> {
    vec![
        Check::new("float.rho_pair", rho_pair_check),
        Check::new("float.family_ac", family_ac_check),
        Check::new("float.rp2", rp2_check),
    ]
}

fn random_triples(cfg: &RunConfig, n: usize, salt: u64, mut f: impl FnMut(&Polynomial, &Polynomial, &Polynomial) -> Result<(), String>) -> CheckResult {
    let mut tally = Tally::new();
    for k in 0..n as u64 {
        let seed = cfg.seed.wrapping_add(POISSON_OFFSET + salt + k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f1 = random_polynomial(&mut rng, 3, 3);
        let f2 = random_polynomial(&mut rng, 3, 3);
        let f3 = random_polynomial(&mut rng, 3, 3);
        tally.record(seed, f(&f1, &f2, &f3));
    }
    tally.finish()
}

fn antisymmetry_check(cfg: &RunConfig) -> CheckResult {
    random_triples(cfg, cfg.samples, 0, |f, g, _| zero_poly("{f,g} + {g,f}", &(&bracket(f, g) + &bracket(g, f))))
}

fn leibniz_check(cfg: &RunConfig) -> CheckResult {
    random_triples(cfg, 2 * cfg.samples, 1 << 16, |f, g, h| {
        let lhs = bracket(f, &(g * h));
        let rhs = &(&bracket(f, g) * h) + &(g * &bracket(f, h));
        zero_poly("{f,gh} - {f,g}h - g{f,h}", &normal_form(&(&lhs - &rhs)))
    })
}

fn casimir_check(cfg: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    for i in [1i8, -1, 2, -2, 3, -3] {
        let ti = Polynomial::t(i);
        for j in COORDINATES {
            tally.record(i as u64, zero_poly(&format!("{{t{i},t{j}}}"), &bracket(&ti, &Polynomial::t(j))));
        }
    }
    let per = random_triples(cfg, cfg.samples, 2 << 16, |f, _, _| {
        for i in [1i8, -1, 2, -2, 3, -3] {
            zero_poly(&format!("{{t{i},f}}"), &bracket(&Polynomial::t(i), f))?;
        }
        Ok(())
    });
    tally.samples += per.samples;
    tally.failures.extend(per.failures);
    tally.finish()
}

fn jacobi_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let n = COORDINATES.len();
    let mut k = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (i, j, l) = (COORDINATES[a], COORDINATES[b], COORDINATES[c]);
                let r = jacobi_residual(&Polynomial::t(i), &Polynomial::t(j), &Polynomial::t(l));
                tally.record(k, zero_poly(&format!("jacobi(t{i},t{j},t{l})"), &r));
                k += 1;
            }
        }
    }
    tally.finish()
}

fn report_check(report: Result<crate::poisson::PoissonReport, String>) -> CheckResult {
    let mut tally = Tally::new();
    match report {
        Ok(r) => {
            for (k, c) in r.checks.iter().enumerate() {
                tally.record(k as u64, zero_poly(&c.name, &c.residual));
            }
        }
        Err(e) => tally.record(0, Err(e)),
    }
    tally.finish()
}

fn bivector_check(_: &RunConfig) -> CheckResult {
    let mut tally = Tally::new();
    let m = bivector();
    let idx = [4i8, -4, 5];
    for a in 0..3 {
        for b in 0..3 {
            let want = base_table().get(idx[a], idx[b]);
            tally.record((3 * a + b) as u64, zero_poly(&format!("entry ({a},{b})"), &normal_form(&(&m[a][b] - &want))));
        }
    }
    tally.finish()
}

/// Structural checks of the bracket.
pub fn poisson_checks() -> Vec<Check> {
    vec![
        Check::new("poisson.antisymmetry", antisymmetry_check),
        Check::new("poisson.leibniz", leibniz_check),
        Check::new("poisson.casimir", casimir_check),
        Check::new("poisson.jacobi", jacobi_check),
        Check::new("poisson.t5_consistency", |_| report_check(Ok(verify_t5_consistency()))),
        Check::new("poisson.word_sum", |_| report_check(word_sum_check().map_err(|e| e.to_string()))),
        Check::new("poisson.bivector", bivector_check),
    ]
}
