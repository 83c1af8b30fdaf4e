//! Property tests for the Poisson bracket and the boundary eigenvalue
//! solver.

use charvar_core::harness::random_polynomial;
use charvar_core::poisson::bracket;
use charvar_core::rp2::{discriminant_f64, eigenvalues, fiber_t4, fiber_tm4, FiberInput};
use charvar_core::{normal_form, Polynomial};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn polys(seed: u64, n: usize) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_polynomial(&mut rng, 3, 3)).collect()
}

/// Boundary traces built from eigenvalues `(a, b, 1/(ab))`, kept apart so
/// the roots are well separated.
fn boundary() -> impl Strategy<Value = [f64; 3]> {
    (0.2f64..5.0, 0.2f64..5.0)
        .prop_map(|(a, b)| {
            let mut l = [a, b, 1.0 / (a * b)];
            l.sort_by(|x, y| y.partial_cmp(x).unwrap());
            l
        })
        .prop_filter("separated roots", |l| (l[0] - l[1]).abs() > 0.05 && (l[1] - l[2]).abs() > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(seed in any::<u64>()) {
        let p = polys(seed, 3);
        let (f, g, h) = (&p[0], &p[1], &p[2]);
        prop_assert!((&bracket(f, g) + &bracket(g, f)).is_zero());
        let lhs = bracket(&(f + h), g);
        prop_assert_eq!(lhs, normal_form(&(&bracket(f, g) + &bracket(h, g))));
    }

    #[test]
    fn bracket_is_a_derivation(seed in any::<u64>()) {
        let p = polys(seed, 3);
        let (f, g, h) = (&p[0], &p[1], &p[2]);
        let lhs = bracket(&(f * g), h);
        let rhs = &(f * &bracket(g, h)) + &(g * &bracket(f, h));
        prop_assert_eq!(lhs, normal_form(&rhs));
    }

    #[test]
    fn boundary_generators_are_central(seed in any::<u64>(), k in 0usize..6) {
        let f = &polys(seed, 1)[0];
        let i = [1i8, -1, 2, -2, 3, -3][k];
        prop_assert!(bracket(&Polynomial::t(i), f).is_zero());
    }

    #[test]
    fn eigenvalues_recover_the_cubic(l in boundary()) {
        let x = l[0] + l[1] + l[2];
        let y = l[0] * l[1] + l[1] * l[2] + l[2] * l[0];
        let got = eigenvalues(x, y).unwrap();
        for (g, w) in got.iter().zip(l) {
            prop_assert!((g - w).abs() <= 1e-8 * w.max(1.0), "{:?} vs {:?}", got, l);
            prop_assert!(*g > 0.0);
        }
        let d: f64 = ((got[0] - got[1]) * (got[0] - got[2]) * (got[1] - got[2])).powi(2);
        let dd = discriminant_f64(x, y);
        prop_assert!((d - dd).abs() <= 1e-9 * dd.abs().max(1.0) * x.max(y).powi(4), "{} vs {}", d, dd);
    }

    #[test]
    fn fiber_formulas_are_finite(lam in boundary(), s in 0.1f64..10.0, t in 0.1f64..10.0, tr in (1.0f64..20.0, 1.0f64..20.0, 1.0f64..20.0)) {
        let inp = FiberInput { lam, s, t, t1: tr.0, t2: tr.1, tm3: tr.2 };
        prop_assert!(fiber_t4(&inp).unwrap().is_finite());
        prop_assert!(fiber_tm4(&inp).unwrap().is_finite());
    }
}
