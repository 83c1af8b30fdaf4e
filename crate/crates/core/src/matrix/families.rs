use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Mat3, MatrixError, RepPair};
use crate::poly::{int, ComplexF, Rational, Scalar};

/// A 2x2 rational block `[[a, b], [c, d]]`.
pub type Block2 = [[Rational; 2]; 2];

fn block_det(b: &Block2) -> Rational {
    &b[0][0] * &b[1][1] - &b[0][1] * &b[1][0]
}

fn embed(b: &Block2, corner: Rational) -> Mat3<Rational> {
    let z = Rational::zero;
    Mat3::from_rows([
        [b[0][0].clone(), b[0][1].clone(), z()],
        [b[1][0].clone(), b[1][1].clone(), z()],
        [z(), z(), corner],
    ])
}

/// SL(2) x {1} embedding of two unimodular blocks.
pub fn family_sl2(b1: &Block2, b2: &Block2) -> Result<RepPair<Rational>, MatrixError> {
    for (i, b) in [b1, b2].into_iter().enumerate() {
        if !block_det(b).is_one() {
            return Err(MatrixError::BlockNotUnimodular(i + 1));
        }
    }
    RepPair::new(embed(b1, Rational::one()), embed(b2, Rational::one()))
}

/// GL(2) x C* embedding: block in the upper left, `1/det` in the corner.
pub fn family_gl2(b1: &Block2, b2: &Block2) -> Result<RepPair<Rational>, MatrixError> {
    let mut mats = Vec::with_capacity(2);
    for (i, b) in [b1, b2].into_iter().enumerate() {
        let d = block_det(b);
        if d.is_zero() {
            return Err(MatrixError::SingularBlock(i + 1));
        }
        mats.push(embed(b, d.recip()));
    }
    let m2 = mats.pop().expect("two blocks");
    let m1 = mats.pop().expect("two blocks");
    RepPair::new(m1, m2)
}

/// `(diag(a1, b1, 1/(a1 b1)), diag(a2, b2, 1/(a2 b2)))`.
pub fn family_diag(a1: &Rational, b1: &Rational, a2: &Rational, b2: &Rational) -> Result<RepPair<Rational>, MatrixError> {
    for (name, v) in [("a1", a1), ("b1", b1), ("a2", a2), ("b2", b2)] {
        if v.is_zero() {
            return Err(MatrixError::ZeroParameter(name));
        }
    }
    let d = |a: &Rational, b: &Rational| Mat3::diag(a.clone(), b.clone(), (a * b).recip());
    RepPair::new(d(a1, b1), d(a2, b2))
}

fn c(re: f64) -> ComplexF {
    ComplexF::real(re).expect("finite")
}

fn sign_matrix(rows: [[f64; 3]; 3], scale: ComplexF) -> Mat3<ComplexF> {
    Mat3::from_rows(rows.map(|r| r.map(|x| c(x) * scale)))
}

/// The two representations that agree on every R-generator but differ on
/// t5. The first matrix is `diag(a, b, 1/(ab))` in both.
pub fn pair_rho1_rho2(a: ComplexF, b: ComplexF) -> Result<(RepPair<ComplexF>, RepPair<ComplexF>), MatrixError> {
    if a.vanishes() {
        return Err(MatrixError::ZeroParameter("a"));
    }
    if b.vanishes() {
        return Err(MatrixError::ZeroParameter("b"));
    }
    let x1 = Mat3::diag(a, b, ComplexF::one() / (a * b));
    let s = c(4f64.powf(-1.0 / 3.0));
    let y1 = sign_matrix([[1., 1., -1.], [1., -1., 1.], [-1., -1., -1.]], s);
    let y2 = sign_matrix([[1., -1., 1.], [-1., -1., -1.], [1., 1., -1.]], s);
    Ok((RepPair::new(x1.clone(), y1)?, RepPair::new(x1, y2)?))
}

/// The two-parameter family through the branch locus, exact or floating.
#[derive(Clone, Debug, PartialEq)]
pub enum AcPair {
    Exact(RepPair<Rational>),
    Float(RepPair<ComplexF>),
}

impl AcPair {
    pub fn to_complex(&self) -> Result<RepPair<ComplexF>, MatrixError> {
        match self {
            AcPair::Exact(p) => p.map(ComplexF::from_rational),
            AcPair::Float(p) => Ok(p.clone()),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AcPair::Exact(_))
    }
}

fn exact_cbrt_int(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// Rational cube root, if there is one.
pub fn rational_cbrt(q: &Rational) -> Option<Rational> {
    Some(Rational::new(exact_cbrt_int(q.numer())?, exact_cbrt_int(q.denom())?))
}

/// `x1 = diag(a, a, 1/a^2)` and `x2 = (c/4)^(1/3) [[1,1,-1],[1,-1,1],[-1/c,-1/c,-1/c]]`.
///
/// Exact when `c/4` is a rational cube, otherwise in complex floats with the
/// real cube root.
pub fn family_ac(a: &Rational, cc: &Rational) -> Result<AcPair, MatrixError> {
    if a.is_zero() {
        return Err(MatrixError::ZeroParameter("a"));
    }
    if cc.is_zero() {
        return Err(MatrixError::ZeroParameter("c"));
    }
    let ratio = cc / int(4);
    let x1 = Mat3::diag(a.clone(), a.clone(), (a * a).recip());
    let m = -cc.recip();
    let inner = Mat3::from_rows([
        [int(1), int(1), int(-1)],
        [int(1), int(-1), int(1)],
        [m.clone(), m.clone(), m],
    ]);
    if let Some(r) = rational_cbrt(&ratio) {
        return Ok(AcPair::Exact(RepPair::new(x1, inner.scale(&r))?));
    }
    let r = ratio.to_f64().map(f64::cbrt).ok_or(MatrixError::ZeroParameter("c"))?;
    let x1f = x1.map(ComplexF::from_rational);
    let x2f = inner.map(ComplexF::from_rational).scale(&c(r));
    Ok(AcPair::Float(RepPair::new(x1f, x2f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn b(a: i64, bb: i64, cc: i64, d: i64) -> Block2 {
        [[int(a), int(bb)], [int(cc), int(d)]]
    }

    #[test]
    fn sl2_embedding() {
        let p = family_sl2(&b(1, 0, 0, 1), &b(1, 0, 0, 1)).unwrap();
        assert_eq!(p, RepPair::identity());
        let q = family_sl2(&b(2, 1, 1, 1), &b(1, 3, 0, 1)).unwrap();
        assert_eq!(q.m1().trace(), int(4));
        assert_eq!(family_sl2(&b(2, 0, 0, 1), &b(1, 0, 0, 1)), Err(MatrixError::BlockNotUnimodular(1)));
    }

    #[test]
    fn gl2_embedding() {
        let p = family_gl2(&b(2, 1, 0, 3), &b(1, 1, 1, 2)).unwrap();
        assert_eq!(p.m1().get(2, 2), &rat(1, 6));
        assert_eq!(family_gl2(&b(1, 0, 0, 1), &b(1, 2, 2, 4)), Err(MatrixError::SingularBlock(2)));
    }

    #[test]
    fn diag_family() {
        let one = int(1);
        assert_eq!(family_diag(&one, &one, &one, &one).unwrap(), RepPair::identity());
        assert_eq!(family_diag(&one, &int(0), &one, &one), Err(MatrixError::ZeroParameter("b1")));
        let p = family_diag(&int(2), &int(3), &rat(1, 5), &int(-7)).unwrap();
        assert_eq!(p.trace_word(&"x1 x2 X1 X2".parse().unwrap()).unwrap(), int(3));
    }

    #[test]
    fn rho_pair_is_unimodular() {
        let (r1, r2) = pair_rho1_rho2(c(2.0), c(3.0)).unwrap();
        for p in [&r1, &r2] {
            assert!((p.m2().det() - ComplexF::one()).abs() < 1e-12);
        }
        assert!(pair_rho1_rho2(c(0.0), c(1.0)).is_err());
    }

    #[test]
    fn ac_family_branches() {
        assert!(!family_ac(&int(2), &int(1)).unwrap().is_exact());
        assert!(!family_ac(&int(2), &int(2)).unwrap().is_exact());
        assert!(family_ac(&int(2), &rat(1, 2)).unwrap().is_exact());
        assert!(family_ac(&int(3), &int(32)).unwrap().is_exact());
        assert!(family_ac(&int(3), &int(-32)).unwrap().is_exact());
        assert_eq!(family_ac(&int(0), &int(1)), Err(MatrixError::ZeroParameter("a")));
        assert_eq!(family_ac(&int(1), &int(0)), Err(MatrixError::ZeroParameter("c")));
    }

    #[test]
    fn rational_cube_roots() {
        assert_eq!(rational_cbrt(&rat(-27, 8)), Some(rat(-3, 2)));
        assert_eq!(rational_cbrt(&rat(1, 4)), None);
    }
}
