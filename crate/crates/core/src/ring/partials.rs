//! Printed partial derivatives of P and Q with respect to the R-generators.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::dihedral::{apply_dihedral, DihedralElement};
use crate::poly::{parse_polynomial, Polynomial};

const DP_TEXT: [(i8, &str); 8] = [
    (1, "-t-4*t-2 + t-1 - t-3*t2 + t-2*t-1*t2"),
    (2, "t-2 - t-3*t1 + t-2*t-1*t1 - t-1*t4"),
    (3, "t-3 - t-2*t-1"),
    (4, "t-4 - t-1*t2"),
    (-4, "-t-2*t1 + t4"),
    (-3, "-t1*t2 + t3"),
    (-2, "-t-4*t1 + t2 + t-1*t1*t2 -t-1*t3"),
    (-1, "t1 + t-2*t1*t2 - t-2*t3 - t2*t4"),
];

const DQ_TEXT: [(i8, &str); 4] = [
    (1, "3*t-4*t-2 + t-3*t-2^2 - 6*t-1 - t-2^3*t-1 + 2*t-4*t-3*t1 - 2*t-4*t-2*t-1*t1 + 3*t1^2 + \
        3*t-3*t2 - t-4*t-2^2*t2 + t-2*t-1*t2 - 2*t-3*t-1*t1*t2 + 2*t-2*t-1^2*t1*t2 - 3*t-2*t1^2*t2 \
        + t-4*t2^2 - t-3*t-2*t2^2 + t-2^2*t-1*t2^2 - t-1*t2^3 + t-4^2*t3 + t-3*t-1*t3 - \
        t-2*t-1^2*t3 + 2*t-2*t1*t3 - t-4*t-1*t2*t3 + 2*t1*t2^2*t3 - 2*t2*t3^2 + t-3^2*t4 + \
        t-4*t-1*t4 - t-3*t-2*t-1*t4 + 2*t-2^2*t1*t4 - t-1^2*t2*t4 + 2*t1*t2*t4 - 3*t3*t4 - \
        t-2*t2*t3*t4 - 2*t-2*t4^2"),
    (2, "t-4*t-3^2 - 6*t-2 - 2*t-4^2*t-1 - t-4*t-3*t-2*t-1 + t-3*t-1^2 - t-2*t-1^3 + 3*t-3*t1 - \
        t-4*t-2^2*t1 + t-2*t-1*t1 - t-3*t-1*t1^2 + t-2*t-1^2*t1^2 - t-2*t1^3 + 2*t-4*t-1^2*t2 + \
        2*t-4*t1*t2 - 2*t-3*t-2*t1*t2 + 2*t-2^2*t-1*t1*t2 + 3*t2^2 - 3*t-1*t1*t2^2 - 3*t-4*t3 + \
        t-3*t-2*t3 - t-2^2*t-1*t3 - t-4*t-1*t1*t3 + 2*t-1*t2*t3 + 2*t1^2*t2*t3 - 2*t1*t3^2 + \
        t-4*t-2*t4 + 3*t-1*t4 - t-1^2*t1*t4 + t1^2*t4 + 2*t-3*t2*t4 - 2*t-2*t-1*t2*t4 - \
        t-2*t1*t3*t4 + t3*t4^2"),
    (3, "-6*t-3 + t-4*t-2^2 + 3*t-2*t-1 + t-4^2*t1 + t-3*t-1*t1 - t-2*t-1^2*t1 + t-2*t1^2 - \
        3*t-4*t2 + t-3*t-2*t2 - t-2^2*t-1*t2 - t-4*t-1*t1*t2 + t-1*t2^2 + t1^2*t2^2 + 2*t-4*t-1*t3 \
        - 4*t1*t2*t3 + 3*t3^2 + t-4*t-3*t4 + t-1^2*t4 - 3*t1*t4 - t-2*t1*t2*t4 + 2*t-2*t3*t4 + \
        t2*t4^2"),
    (4, "-6*t-4 - 3*t-3*t-2 + t-2^2*t-1 + t-3^2*t1 + t-4*t-1*t1 - t-3*t-2*t-1*t1 + t-2^2*t1^2 + \
        t-4*t-2*t2 + 3*t-1*t2 - t-1^2*t1*t2 + t1^2*t2 + t-3*t2^2 - t-2*t-1*t2^2 + t-4*t-3*t3 + \
        t-1^2*t3 - 3*t1*t3 - t-2*t1*t2*t3 + t-2*t3^2 + 2*t-3*t-1*t4 - 4*t-2*t1*t4 + 2*t2*t3*t4 + \
        3*t4^2"),
];

/// The eight printed partials of P, keyed by generator index.
pub fn partials_p() -> &'static BTreeMap<i8, Polynomial> {
    static CELL: OnceLock<BTreeMap<i8, Polynomial>> = OnceLock::new();
    CELL.get_or_init(|| {
        DP_TEXT
            .iter()
            .map(|(i, s)| (*i, parse_polynomial(s).expect("built-in partial parses")))
            .collect()
    })
}

/// Partials of Q: indices 1..4 as printed, negative indices as mirror images
/// under t(i) -> t(-i).
pub fn partials_q() -> &'static BTreeMap<i8, Polynomial> {
    static CELL: OnceLock<BTreeMap<i8, Polynomial>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = BTreeMap::new();
        for (i, s) in DQ_TEXT.iter() {
            let f = parse_polynomial(s).expect("built-in partial parses");
            let mirrored = apply_dihedral(DihedralElement::Mirror, &f);
            out.insert(-*i, mirrored);
            out.insert(*i, f);
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Variable;
    use crate::ring::{poly_p, poly_q};

    #[test]
    fn printed_partials_match_formal_derivatives() {
        for i in Variable::R_GENERATORS {
            assert_eq!(partials_p()[&i], poly_p().partial(&Variable::t(i)), "dP/d{i}");
            assert_eq!(partials_q()[&i], poly_q().partial(&Variable::t(i)), "dQ/d{i}");
        }
    }

    #[test]
    fn small_partial() {
        assert_eq!(partials_p()[&3].to_string(), "-t-1*t-2 + t-3");
    }
}
