//! Machine-checkable trace identities. Each entry evaluates `lhs - rhs` on a
//! tuple of matrices; on valid input the residual is exactly zero.

use std::fmt;
use std::str::FromStr;

use super::TraceError;
use crate::matrix::{inverse_sl, Mat3, RepPair};
use crate::poly::{rat, Rational, Scalar};
use crate::ring::{pi_map, poly_p};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityName {
    Cayham,
    Trinv,
    Dettr,
    Cayham2,
    Detsum,
    AdjtraceSum,
    Polarization,
    Pol,
    Fundamental,
    Fund1,
    Fund2,
    InvSquare,
    InvCross,
    Polyp1,
    Powerreduce,
    Sandwich,
    SandwichPol,
    SandwichSum,
    FundamentalProduct,
    Polyp2,
}

/// Static description of a catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: IdentityName,
    pub arity: usize,
    /// Indices of arguments that must be invertible with determinant 1.
    pub unimodular: &'static [usize],
    pub summary: &'static str,
}

const CATALOG: [IdentityRecord; 20] = [
    rec(IdentityName::Cayham, 1, &[], "x^3 - tr(x)x^2 + tr(adj x)x - det(x)I = 0"),
    rec(IdentityName::Trinv, 1, &[], "tr(adj x) = (tr(x)^2 - tr(x^2))/2"),
    rec(IdentityName::Dettr, 1, &[], "det x = tr(x^3)/3 + tr(x)^3/6 - tr(x)tr(x^2)/2"),
    rec(IdentityName::Cayham2, 2, &[0], "x^2 y - tr(x)xy + tr(x^-1)y - x^-1 y = 0"),
    rec(IdentityName::Detsum, 2, &[], "det(x + ly) as a cubic in l with trace coefficients"),
    rec(IdentityName::AdjtraceSum, 2, &[], "(x + ly)tr(adj(x + ly)) as a cubic in l"),
    rec(IdentityName::Polarization, 2, &[], "yx^2 + x^2y + xyx in terms of traces"),
    rec(IdentityName::Pol, 2, &[], "all four l-coefficients of Cayley-Hamilton for x + ly vanish"),
    rec(IdentityName::Fundamental, 3, &[], "sum over orderings of xyz = pol(x+z,y) - pol(x,y) - pol(z,y)"),
    rec(IdentityName::Fund1, 4, &[], "trace of u pol(x,y) v"),
    rec(IdentityName::Fund2, 2, &[0, 1], "commutator trace via fund1 with u = y^-1 x^-1, v = x^-1"),
    rec(IdentityName::InvSquare, 2, &[0, 1], "tr(y^-1 x^-2) in length-2 traces"),
    rec(IdentityName::InvCross, 2, &[0, 1], "tr(y^-1 x^-1 y x^-1) in length-2 traces"),
    rec(IdentityName::Polyp1, 2, &[0, 1], "tr[x,y] + tr[y,x] as a polynomial in short traces"),
    rec(IdentityName::Powerreduce, 3, &[1], "tr(u x^n v) recursion for n = 2..5 and n = -2..-4"),
    rec(IdentityName::Sandwich, 3, &[], "x^2 z y^2 = -(xy^2x)z - (xyx)zy + x pol(y, xz)"),
    rec(IdentityName::SandwichPol, 3, &[], "x^2 z y^2 with pol(x, y^2) and pol(x, y) substituted"),
    rec(IdentityName::SandwichSum, 3, &[], "3x^2 z y^2 as a sum of five pol terms"),
    rec(IdentityName::FundamentalProduct, 6, &[], "fundamental expression at x -> xy, y -> zu, z -> vw"),
    rec(IdentityName::Polyp2, 2, &[0, 1], "tr(x2 x1 x2^-1 x1^-1) = P - t5"),
];

const fn rec(name: IdentityName, arity: usize, unimodular: &'static [usize], summary: &'static str) -> IdentityRecord {
    IdentityRecord { name, arity, unimodular, summary }
}

pub fn catalog() -> &'static [IdentityRecord] {
    &CATALOG
}

impl IdentityName {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityName::Cayham => "cayham",
            IdentityName::Trinv => "trinv",
            IdentityName::Dettr => "dettr",
            IdentityName::Cayham2 => "cayham2",
            IdentityName::Detsum => "detsum",
            IdentityName::AdjtraceSum => "adjtrace-sum",
            IdentityName::Polarization => "polarization",
            IdentityName::Pol => "pol",
            IdentityName::Fundamental => "fundamental",
            IdentityName::Fund1 => "fund1",
            IdentityName::Fund2 => "fund2",
            IdentityName::InvSquare => "inv-square",
            IdentityName::InvCross => "inv-cross",
            IdentityName::Polyp1 => "polyp1",
            IdentityName::Powerreduce => "powerreduce",
            IdentityName::Sandwich => "sandwich",
            IdentityName::SandwichPol => "sandwich-pol",
            IdentityName::SandwichSum => "sandwich-sum",
            IdentityName::FundamentalProduct => "fundamental-product",
            IdentityName::Polyp2 => "polyp2",
        }
    }

    pub fn record(self) -> &'static IdentityRecord {
        CATALOG.iter().find(|r| r.name == self).expect("every name has a record")
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityName {
    type Err = TraceError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CATALOG
            .iter()
            .map(|r| r.name)
            .find(|n| n.as_str() == s)
            .ok_or_else(|| TraceError::UnknownIdentity(s.to_string()))
    }
}

/// Result of evaluating an identity: every component must vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual<S> {
    pub scalars: Vec<S>,
    pub matrices: Vec<Mat3<S>>,
}

impl<S: Scalar> Residual<S> {
    fn scalar(s: S) -> Self {
        Residual { scalars: vec![s], matrices: vec![] }
    }

    fn matrix(m: Mat3<S>) -> Self {
        Residual { scalars: vec![], matrices: vec![m] }
    }

    pub fn is_zero(&self) -> bool {
        self.scalars.iter().all(S::vanishes) && self.matrices.iter().all(Mat3::is_zero)
    }

    /// Largest magnitude over all components.
    pub fn max_abs(&self) -> f64 {
        let s = self.scalars.iter().map(S::magnitude).fold(0.0, f64::max);
        self.matrices.iter().map(Mat3::max_abs).fold(s, f64::max)
    }
}

// Small helpers so the identities read close to their usual notation.

fn tr<S: Scalar>(m: &Mat3<S>) -> S {
    m.trace()
}

fn prod<S: Scalar>(ms: &[&Mat3<S>]) -> Mat3<S> {
    ms.iter().fold(Mat3::identity(), |acc, m| &acc * *m)
}

fn q<S: Scalar>(n: i64, d: i64) -> S {
    S::from_rational(&rat(n, d))
}

/// Linear combination of matrices with scalar coefficients.
struct Lin<S> {
    acc: Mat3<S>,
}

impl<S: Scalar> Lin<S> {
    fn new() -> Self {
        Lin { acc: Mat3::zero() }
    }

    fn add(mut self, c: S, m: &Mat3<S>) -> Self {
        self.acc = &self.acc + &m.scale(&c);
        self
    }

    fn id(self, c: S) -> Self {
        self.add(c, &Mat3::identity())
    }

    fn done(self) -> Mat3<S> {
        self.acc
    }
}

/// The trace form of the polarization right-hand side.
pub fn pol_rhs<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> Mat3<S> {
    let (tx, ty) = (tr(x), tr(y));
    let x2 = x * x;
    let xy = x * y;
    let yx = y * x;
    let txy = tr(&xy);
    let tx2 = tr(&x2);
    let tyx2 = tr(&(&yx * x));
    let half = q::<S>(1, 2);
    Lin::new()
        .add(ty.clone(), &x2)
        .add(tx.clone(), &yx)
        .add(tx.clone(), &xy)
        .add(tx.times(&ty).negated(), x)
        .add(txy.clone(), x)
        .id(tyx2)
        .id(tx.times(&txy).negated())
        .add(half.times(&tx.times(&tx).minus(&tx2)).negated(), y)
        .id(half.times(&ty.times(&tx).times(&tx).minus(&ty.times(&tx2))))
        .done()
}

fn pol_lhs<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> Mat3<S> {
    let x2 = x * x;
    &(&(y * &x2) + &(&x2 * y)) + &prod(&[x, y, x])
}

/// lambda-coefficients E0..E3 of the Cayley-Hamilton equation for x + l y.
fn cayhamsum_coefficients<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> [Mat3<S>; 4] {
    let h = q::<S>(1, 2);
    let third = q::<S>(1, 3);
    let sixth = q::<S>(1, 6);
    let pure = |a: &Mat3<S>| {
        let ta = tr(a);
        let a2 = a * a;
        let ta2 = tr(&a2);
        let ta3 = tr(&(&a2 * a));
        Lin::new()
            .add(S::scalar_one(), &(&a2 * a))
            .add(ta.negated(), &a2)
            .add(h.times(&ta).times(&ta), a)
            .add(h.times(&ta2).negated(), a)
            .id(third.times(&ta3).negated())
            .id(sixth.times(&ta.pow(3)).negated())
            .id(h.times(&ta).times(&ta2))
            .done()
    };
    // mixed coefficient: linear in `a`, quadratic in `b`
    let mixed = |a: &Mat3<S>, b: &Mat3<S>| {
        let (ta, tb) = (tr(a), tr(b));
        let b2 = b * b;
        let tb2 = tr(&b2);
        let tab = tr(&(a * b));
        let tab2 = tr(&(a * &b2));
        Lin::new()
            .add(S::scalar_one(), &(a * &b2))
            .add(S::scalar_one(), &(&b2 * a))
            .add(S::scalar_one(), &prod(&[b, a, b]))
            .add(ta.negated(), &b2)
            .add(tb.negated(), &(a * b))
            .add(tb.negated(), &(b * a))
            .add(h.times(&tb).times(&tb), a)
            .add(h.times(&tb2).negated(), a)
            .add(ta.times(&tb), b)
            .add(tab.negated(), b)
            .id(tab2.negated())
            .id(h.times(&ta).times(&tb).times(&tb).negated())
            .id(h.times(&ta).times(&tb2))
            .id(tb.times(&tab))
            .done()
    };
    [pure(x), mixed(y, x), mixed(x, y), pure(y)]
}

fn sample_lambdas<S: Scalar>() -> Vec<S> {
    [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2)].iter().map(|&(n, d)| q(n, d)).collect()
}

fn detsum_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> Residual<S> {
    let h = q::<S>(1, 2);
    let (tx, ty) = (tr(x), tr(y));
    let x2 = x * x;
    let y2 = y * y;
    let (tx2, ty2) = (tr(&x2), tr(&y2));
    let tx3 = tr(&(&x2 * x));
    let ty3 = tr(&(&y2 * y));
    let txy = tr(&(x * y));
    let d3 = q::<S>(1, 3).times(&ty3).plus(&q::<S>(1, 6).times(&ty.pow(3))).minus(&h.times(&ty).times(&ty2));
    let d2 = tr(&(x * &y2)).plus(&h.times(&tx).times(&ty).times(&ty)).minus(&h.times(&tx).times(&ty2)).minus(&ty.times(&txy));
    let d1 = tr(&(&x2 * y)).plus(&h.times(&ty).times(&tx).times(&tx)).minus(&h.times(&ty).times(&tx2)).minus(&tx.times(&txy));
    let d0 = q::<S>(1, 3).times(&tx3).plus(&q::<S>(1, 6).times(&tx.pow(3))).minus(&h.times(&tx).times(&tx2));
    let coeffs = [d0, d1, d2, d3];
    let scalars = sample_lambdas::<S>()
        .into_iter()
        .map(|l| {
            let lhs = (x + &y.scale(&l)).det();
            let rhs = coeffs.iter().enumerate().fold(S::scalar_zero(), |acc, (k, c)| acc.plus(&c.times(&l.pow(k as u32))));
            lhs.minus(&rhs)
        })
        .collect();
    Residual { scalars, matrices: vec![] }
}

fn adjtrace_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> Residual<S> {
    let h = q::<S>(1, 2);
    let (tx, ty) = (tr(x), tr(y));
    let tx2 = tr(&(x * x));
    let ty2 = tr(&(y * y));
    let txy = tr(&(x * y));
    let c3 = Lin::new().add(h.times(&ty).times(&ty), y).add(h.times(&ty2).negated(), y).done();
    let c2 = Lin::new()
        .add(h.times(&ty).times(&ty), x)
        .add(h.times(&ty2).negated(), x)
        .add(tx.times(&ty), y)
        .add(txy.negated(), y)
        .done();
    let c1 = Lin::new()
        .add(h.times(&tx).times(&tx), y)
        .add(h.times(&tx2).negated(), y)
        .add(tx.times(&ty), x)
        .add(txy.negated(), x)
        .done();
    let c0 = Lin::new().add(h.times(&tx).times(&tx), x).add(h.times(&tx2).negated(), x).done();
    let coeffs = [c0, c1, c2, c3];
    let matrices = sample_lambdas::<S>()
        .into_iter()
        .map(|l| {
            let s = x + &y.scale(&l);
            let lhs = s.scale(&tr(&s.adjugate()));
            let rhs = coeffs.iter().enumerate().fold(Mat3::zero(), |acc, (k, c)| &acc + &c.scale(&l.pow(k as u32)));
            &lhs - &rhs
        })
        .collect();
    Residual { scalars: vec![], matrices }
}

fn pol_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>) -> Residual<S> {
    let coeffs = cayhamsum_coefficients(x, y);
    let mut matrices: Vec<Mat3<S>> = coeffs.to_vec();
    // The whole Cayley-Hamilton expression for x + l y must equal the sum of
    // the coefficient matrices at each sample l.
    for l in sample_lambdas::<S>() {
        let s = x + &y.scale(&l);
        let s2 = &s * &s;
        let ch = Lin::new()
            .add(S::scalar_one(), &(&s2 * &s))
            .add(tr(&s).negated(), &s2)
            .add(tr(&s.adjugate()), &s)
            .id(s.det().negated())
            .done();
        let sum = coeffs.iter().enumerate().fold(Mat3::zero(), |acc, (k, c)| &acc + &c.scale(&l.pow(k as u32)));
        matrices.push(&ch - &sum);
    }
    Residual { scalars: vec![], matrices }
}

fn fund1_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, u: &Mat3<S>, v: &Mat3<S>) -> S {
    let h = q::<S>(1, 2);
    let x2 = x * x;
    let (tx, ty) = (tr(x), tr(y));
    let tx2 = tr(&x2);
    let txy = tr(&(x * y));
    let tyx2 = tr(&(y * &x2));
    let tuv = tr(&(u * v));
    let lhs = tr(&prod(&[u, y, &x2, v])).plus(&tr(&prod(&[u, &x2, y, v])));
    let rhs = tr(&prod(&[u, x, y, x, v]))
        .negated()
        .plus(&ty.times(&tr(&prod(&[u, &x2, v]))))
        .plus(&tx.times(&tr(&prod(&[u, y, x, v]))))
        .plus(&tx.times(&tr(&prod(&[u, x, y, v]))))
        .minus(&tx.times(&ty).minus(&txy).times(&tr(&prod(&[u, x, v]))))
        .plus(&tyx2.minus(&tx.times(&txy)).times(&tuv))
        .minus(&h.times(&tx.times(&tx).minus(&tx2)).times(&tr(&prod(&[u, y, v]))))
        .plus(&h.times(&ty.times(&tx).times(&tx).minus(&ty.times(&tx2))).times(&tuv));
    lhs.minus(&rhs)
}

fn fund2_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, xi: &Mat3<S>, yi: &Mat3<S>) -> S {
    let t = |ms: &[&Mat3<S>]| tr(&prod(ms));
    let three = S::from_i64(3);
    let two = S::from_i64(2);
    let lhs = t(&[x, y, xi, yi]);
    let rhs = t(&[y, x, yi, xi])
        .negated()
        .minus(&three)
        .plus(&tr(y).times(&tr(yi)))
        .plus(&two.times(&tr(x)).times(&tr(xi)))
        .minus(&tr(x).times(&tr(y)).times(&t(&[xi, yi])))
        .plus(&t(&[x, y]).times(&t(&[xi, yi])))
        .minus(&tr(xi).times(&t(&[yi, xi, y, xi])))
        .plus(&t(&[y, x, x]).minus(&tr(x).times(&t(&[x, y]))).plus(&tr(xi).times(&tr(y))).times(&t(&[yi, xi, xi])));
    lhs.minus(&rhs)
}

fn inv_square_residual<S: Scalar>(x: &Mat3<S>, xi: &Mat3<S>, yi: &Mat3<S>) -> S {
    let t = |ms: &[&Mat3<S>]| tr(&prod(ms));
    let lhs = t(&[yi, xi, xi]);
    let rhs = tr(xi).times(&t(&[xi, yi])).minus(&tr(x).times(&tr(yi))).plus(&t(&[x, yi]));
    lhs.minus(&rhs)
}

fn inv_cross_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, xi: &Mat3<S>, yi: &Mat3<S>) -> S {
    let t = |ms: &[&Mat3<S>]| tr(&prod(ms));
    let lhs = t(&[yi, xi, y, xi]);
    let rhs = t(&[xi, yi])
        .times(&t(&[xi, y]))
        .minus(&tr(x).times(&tr(y)).times(&tr(yi)))
        .plus(&tr(y).times(&t(&[x, yi])))
        .plus(&tr(x))
        .plus(&t(&[x, y]).times(&tr(yi)));
    lhs.minus(&rhs)
}

/// Right-hand side of the commutator relation, shared by two entries.
fn commutator_rhs<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, xi: &Mat3<S>, yi: &Mat3<S>) -> S {
    let t = |ms: &[&Mat3<S>]| tr(&prod(ms));
    let (tx, ty, txi, tyi) = (tr(x), tr(y), tr(xi), tr(yi));
    t(&[y, x, yi, xi])
        .negated()
        .plus(&tx.times(&txi).times(&ty).times(&tyi))
        .plus(&tx.times(&txi))
        .plus(&ty.times(&tyi))
        .plus(&t(&[x, y]).times(&t(&[xi, yi])))
        .plus(&t(&[x, yi]).times(&t(&[xi, y])))
        .minus(&txi.times(&ty).times(&t(&[x, yi])))
        .minus(&tx.times(&tyi).times(&t(&[xi, y])))
        .minus(&tx.times(&ty).times(&t(&[xi, yi])))
        .minus(&t(&[x, y]).times(&txi).times(&tyi))
        .minus(&S::from_i64(3))
}

fn powerreduce_residual<S: Scalar>(u: &Mat3<S>, x: &Mat3<S>, v: &Mat3<S>, xi: &Mat3<S>) -> Residual<S> {
    let mut scalars = Vec::new();
    for (base, inv, top) in [(x, xi, 5), (xi, x, 4)] {
        // powers base^-1 .. base^5
        let mut pows: Vec<Mat3<S>> = vec![inv.clone(), Mat3::identity()];
        for k in 1..=5 {
            let next = &pows[k] * base;
            pows.push(next);
        }
        let p = |n: i32| &pows[(n + 1) as usize];
        let t = |n: i32| tr(&prod(&[u, p(n), v]));
        for n in 2..=top {
            let rhs = tr(base).times(&t(n - 1)).minus(&tr(inv).times(&t(n - 2))).plus(&t(n - 3));
            scalars.push(t(n).minus(&rhs));
        }
    }
    Residual { scalars, matrices: vec![] }
}

fn sandwich<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, z: &Mat3<S>) -> Mat3<S> {
    let lhs = prod(&[x, x, z, y, y]);
    let rhs = &(&(-&prod(&[x, y, y, x, z])) - &prod(&[x, y, x, z, y])) + &(x * &pol_rhs(y, &(x * z)));
    &lhs - &rhs
}

fn sandwich_pol<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, z: &Mat3<S>) -> Mat3<S> {
    let y2 = y * y;
    let x2 = x * x;
    let lhs = prod(&[x, x, z, y, y]);
    let a = &(&(&y2 * &x2) + &(&x2 * &y2)) - &pol_rhs(x, &y2);
    let b = &(&(y * &x2) + &(&x2 * y)) - &pol_rhs(x, y);
    let rhs = &(&(&a * z) + &prod(&[&b, z, y])) + &(x * &pol_rhs(y, &(x * z)));
    &lhs - &rhs
}

fn sandwich_sum<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, z: &Mat3<S>) -> Mat3<S> {
    let x2 = x * x;
    let y2 = y * y;
    let lhs = prod(&[x, x, z, y, y]).scale(&S::from_i64(3));
    let rhs = Lin::new()
        .add(S::scalar_one(), &pol_rhs(y, &(&x2 * z)))
        .add(S::scalar_one(), &(x * &pol_rhs(y, &(x * z))))
        .add(S::from_i64(-1), &(&pol_rhs(x, &y2) * z))
        .add(S::from_i64(-1), &prod(&[&pol_rhs(x, y), z, y]))
        .add(S::scalar_one(), &(&x2 * &pol_rhs(y, z)))
        .done();
    &lhs - &rhs
}

/// The six orderings of (x, y, z) on the left of the fundamental expression.
fn fundamental_residual<S: Scalar>(x: &Mat3<S>, y: &Mat3<S>, z: &Mat3<S>) -> Mat3<S> {
    let lhs = [[x, z, y], [z, x, y], [y, x, z], [y, z, x], [x, y, z], [z, y, x]]
        .iter()
        .fold(Mat3::zero(), |acc, w| &acc + &prod(w));
    let rhs = &(&pol_rhs(&(x + z), y) - &pol_rhs(x, y)) - &pol_rhs(z, y);
    &lhs - &rhs
}

fn unimodular_inverse<S: Scalar>(m: &Mat3<S>) -> Result<Mat3<S>, TraceError> {
    inverse_sl(m).map_err(TraceError::from)
}

/// Evaluate `lhs - rhs` of a named identity.
pub fn identity_residual<S: Scalar>(name: &str, mats: &[Mat3<S>]) -> Result<Residual<S>, TraceError> {
    let id: IdentityName = name.parse()?;
    residual_of(id, mats)
}

pub fn residual_of<S: Scalar>(id: IdentityName, mats: &[Mat3<S>]) -> Result<Residual<S>, TraceError> {
    let record = id.record();
    if mats.len() != record.arity {
        return Err(TraceError::ArityMismatch { name: id.as_str(), expected: record.arity, got: mats.len() });
    }
    let inv: Vec<Option<Mat3<S>>> = (0..mats.len())
        .map(|i| if record.unimodular.contains(&i) { unimodular_inverse(&mats[i]).map(Some) } else { Ok(None) })
        .collect::<Result<_, _>>()?;
    let m = |i: usize| &mats[i];
    let mi = |i: usize| inv[i].as_ref().expect("checked unimodular");
    let h = q::<S>(1, 2);
    Ok(match id {
        IdentityName::Cayham => {
            let x = m(0);
            let x2 = x * x;
            Residual::matrix(
                Lin::new()
                    .add(S::scalar_one(), &(&x2 * x))
                    .add(tr(x).negated(), &x2)
                    .add(tr(&x.adjugate()), x)
                    .id(x.det().negated())
                    .done(),
            )
        }
        IdentityName::Trinv => {
            let x = m(0);
            let rhs = h.times(&tr(x).times(&tr(x)).minus(&tr(&(x * x))));
            Residual::scalar(tr(&x.adjugate()).minus(&rhs))
        }
        IdentityName::Dettr => {
            let x = m(0);
            let x2 = x * x;
            let rhs = q::<S>(1, 3)
                .times(&tr(&(&x2 * x)))
                .plus(&q::<S>(1, 6).times(&tr(x).pow(3)))
                .minus(&h.times(&tr(x)).times(&tr(&x2)));
            Residual::scalar(x.det().minus(&rhs))
        }
        IdentityName::Cayham2 => {
            let (x, y, xi) = (m(0), m(1), mi(0));
            Residual::matrix(
                Lin::new()
                    .add(S::scalar_one(), &prod(&[x, x, y]))
                    .add(tr(x).negated(), &(x * y))
                    .add(tr(xi), y)
                    .add(S::from_i64(-1), &(xi * y))
                    .done(),
            )
        }
        IdentityName::Detsum => detsum_residual(m(0), m(1)),
        IdentityName::AdjtraceSum => adjtrace_residual(m(0), m(1)),
        IdentityName::Polarization => Residual::matrix(&pol_lhs(m(0), m(1)) - &pol_rhs(m(0), m(1))),
        IdentityName::Pol => pol_residual(m(0), m(1)),
        IdentityName::Fundamental => Residual::matrix(fundamental_residual(m(0), m(1), m(2))),
        IdentityName::Fund1 => Residual::scalar(fund1_residual(m(0), m(1), m(2), m(3))),
        IdentityName::Fund2 => Residual::scalar(fund2_residual(m(0), m(1), mi(0), mi(1))),
        IdentityName::InvSquare => Residual::scalar(inv_square_residual(m(0), mi(0), mi(1))),
        IdentityName::InvCross => Residual::scalar(inv_cross_residual(m(0), m(1), mi(0), mi(1))),
        IdentityName::Polyp1 => {
            let (x, y, xi, yi) = (m(0), m(1), mi(0), mi(1));
            let lhs = tr(&prod(&[x, y, xi, yi]));
            Residual::scalar(lhs.minus(&commutator_rhs(x, y, xi, yi)))
        }
        IdentityName::Powerreduce => powerreduce_residual(m(0), m(1), m(2), mi(1)),
        IdentityName::Sandwich => Residual::matrix(sandwich(m(0), m(1), m(2))),
        IdentityName::SandwichPol => Residual::matrix(sandwich_pol(m(0), m(1), m(2))),
        IdentityName::SandwichSum => Residual::matrix(sandwich_sum(m(0), m(1), m(2))),
        IdentityName::FundamentalProduct => {
            let a = m(0) * m(1);
            let b = m(2) * m(3);
            let c = m(4) * m(5);
            Residual::matrix(fundamental_residual(&a, &b, &c))
        }
        IdentityName::Polyp2 => {
            let pair = RepPair::new(m(0).clone(), m(1).clone())?;
            let lhs = pair.trace_word(&Word::from_pairs(&[(2, 1), (1, 1), (2, -1), (1, -1)]))?;
            let point = pi_map(&pair)?;
            let p: S = poly_p().eval(|v| point.value(v))?;
            Residual::scalar(lhs.minus(&p.minus(point.t(5))))
        }
    })
}

/// Exact residual on a sampled pair, drawing any extra arguments from words
/// in the pair so every slot is unimodular.
pub fn residual_on_pair(id: IdentityName, pair: &RepPair<Rational>) -> Result<Residual<Rational>, TraceError> {
    let words: [&[(u8, i32)]; 6] = [&[(1, 1)], &[(2, 1)], &[(1, 1), (2, -1)], &[(2, 1), (1, 1), (1, 1)], &[(1, -1), (2, 1)], &[(2, -1)]];
    let args = words[..id.record().arity]
        .iter()
        .map(|w| pair.eval_word(&Word::from_pairs(w)))
        .collect::<Result<Vec<_>, _>>()?;
    residual_of(id, &args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::sample_sl3q;
    use crate::poly::int;

    #[test]
    fn names_round_trip() {
        for r in catalog() {
            assert_eq!(r.name.as_str().parse::<IdentityName>().unwrap(), r.name);
        }
        assert_eq!(catalog().len(), 20);
        assert!(matches!("nope".parse::<IdentityName>(), Err(TraceError::UnknownIdentity(_))));
    }

    #[test]
    fn cayham_on_identity() {
        let r = identity_residual::<Rational>("cayham", &[Mat3::identity()]).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn arity_and_unimodularity_are_checked() {
        let e = identity_residual::<Rational>("cayham", &[]);
        assert!(matches!(e, Err(TraceError::ArityMismatch { expected: 1, got: 0, .. })));
        let two = Mat3::scalar(int(2));
        let e = identity_residual::<Rational>("polyp1", &[two, Mat3::identity()]);
        assert!(matches!(e, Err(TraceError::Matrix(_))));
    }

    #[test]
    fn every_identity_vanishes_on_a_sample() {
        let pair = sample_sl3q(11, 6).unwrap();
        for r in catalog() {
            let res = residual_on_pair(r.name, &pair).unwrap();
            assert!(res.is_zero(), "{} residual {:?}", r.name, res.max_abs());
        }
    }

    #[test]
    fn flipped_sign_breaks_polarization() {
        // + tr(x)tr(xy)I instead of the minus does not vanish
        let pair = sample_sl3q(3, 6).unwrap();
        let (x, y) = (pair.m1(), pair.m2());
        let wrong = &pol_rhs(x, y) + &Mat3::scalar(int(2) * tr(x) * tr(&(x * y)));
        assert!(!(&pol_lhs(x, y) - &wrong).is_zero());
    }
}
