//! Property tests for exact matrices, the identity catalog and the trace
//! reduction engine, with matrix traces as the oracle.

use charvar_core::matrix::{sample_conjugator, sample_sl3q, Mat3, RepPair};
use charvar_core::ring::{is_homogeneous, pi_map};
use charvar_core::trace::{reduce_by_interpolation, reduce_trace_word, reduce_with_rules, residual_of, IdentityName};
use charvar_core::{rat, Letter, Rational, Scalar, Variable, Word};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Mat3<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 9).prop_map(|v| {
        let e: Vec<Rational> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
        Mat3::from_rows([[e[0].clone(), e[1].clone(), e[2].clone()], [e[3].clone(), e[4].clone(), e[5].clone()], [e[6].clone(), e[7].clone(), e[8].clone()]])
    })
}

fn word(max_len: usize, max_exp: i32) -> impl Strategy<Value = Word> {
    let letter = (1u8..=2, prop_oneof![-max_exp..=-1, 1..=max_exp]);
    prop::collection::vec(letter, 1..=max_len)
        .prop_map(|ls| Word::new(2, ls.into_iter().map(|(g, e)| Letter::new(g, e)).collect()).unwrap())
}

fn pair() -> impl Strategy<Value = RepPair<Rational>> {
    (0u64..1_000_000).prop_map(|s| sample_sl3q(s, 6).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn single_matrix_identities(m in matrix()) {
        for id in [IdentityName::Cayham, IdentityName::Trinv, IdentityName::Dettr] {
            prop_assert!(residual_of(id, std::slice::from_ref(&m)).unwrap().is_zero(), "{}", id);
        }
    }

    #[test]
    fn eval_respects_concatenation(p in pair(), u in word(5, 2), v in word(5, 2)) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(p.eval_word(&uv).unwrap(), &p.eval_word(&u).unwrap() * &p.eval_word(&v).unwrap());
    }

    #[test]
    fn traces_are_conjugation_invariant(p in pair(), w in word(6, 2), s in 0u64..1000) {
        let q = p.conjugate(&sample_conjugator(s)).unwrap();
        prop_assert_eq!(p.trace_word(&w).unwrap(), q.trace_word(&w).unwrap());
    }

    #[test]
    fn reduction_matches_matrix_traces(w in word(5, 3), p in pair()) {
        let expr = reduce_trace_word(&w).unwrap();
        prop_assert!(expr.degree_in(&Variable::t(5)) <= 1);
        prop_assert_eq!(expr.degree_in(&Variable::t(-5)), 0);
        let point = pi_map(&p).unwrap();
        prop_assert_eq!(point.eval(&expr).unwrap(), p.trace_word(&w).unwrap(), "{}", w);
        if !expr.is_zero() {
            prop_assert_eq!(is_homogeneous(&expr).unwrap(), Some(w.z3_weight().unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn rules_agree_with_interpolation(w in word(4, 1)) {
        let rules = reduce_with_rules(&w).unwrap();
        let fitted = reduce_by_interpolation(&w).unwrap();
        prop_assert_eq!(rules, fitted, "{}", w);
    }
}

#[test]
fn unit_pair_traces_are_three() {
    let p = RepPair::<Rational>::identity();
    let w: Word = "x1 X2 x1^2".parse().unwrap();
    assert_eq!(p.trace_word(&w).unwrap(), Rational::from_i64(3));
}
