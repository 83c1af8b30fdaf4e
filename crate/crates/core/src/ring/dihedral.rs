//! The order-8 group generated by the letter swap τ (x1 <-> x2) and the
//! inversion ι (x1 -> x1^-1), acting on the character ring.

use std::fmt;
use std::str::FromStr;

use super::relations::poly_p;
use super::RingError;
use crate::poly::{Polynomial, Variable};
use crate::word::{Word, WordError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DihedralElement {
    Id,
    Iota,
    Tau,
    IotaTau,
    TauIota,
    TauIotaTau,
    IotaTauIota,
    /// τιτι, which sends every t(i) to t(-i).
    Mirror,
}

const IOTA: [(i8, i8); 8] = [(1, -1), (-1, 1), (2, 2), (-2, -2), (3, -4), (-3, 4), (4, -3), (-4, 3)];
const TAU: [(i8, i8); 8] = [(1, 2), (-1, -2), (2, 1), (-2, -1), (3, 3), (-3, -3), (4, -4), (-4, 4)];

fn lookup(table: &[(i8, i8); 8], i: i8) -> i8 {
    table.iter().find(|(k, _)| *k == i).map(|(_, v)| *v).expect("index in R")
}

impl DihedralElement {
    pub const ALL: [DihedralElement; 8] = [
        DihedralElement::Id,
        DihedralElement::Iota,
        DihedralElement::Tau,
        DihedralElement::IotaTau,
        DihedralElement::TauIota,
        DihedralElement::TauIotaTau,
        DihedralElement::IotaTauIota,
        DihedralElement::Mirror,
    ];

    /// The generator letters, leftmost applied last.
    fn letters(self) -> &'static [bool] {
        // true = ι, false = τ
        match self {
            DihedralElement::Id => &[],
            DihedralElement::Iota => &[true],
            DihedralElement::Tau => &[false],
            DihedralElement::IotaTau => &[true, false],
            DihedralElement::TauIota => &[false, true],
            DihedralElement::TauIotaTau => &[false, true, false],
            DihedralElement::IotaTauIota => &[true, false, true],
            DihedralElement::Mirror => &[false, true, false, true],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DihedralElement::Id => "id",
            DihedralElement::Iota => "ι",
            DihedralElement::Tau => "τ",
            DihedralElement::IotaTau => "ιτ",
            DihedralElement::TauIota => "τι",
            DihedralElement::TauIotaTau => "τιτ",
            DihedralElement::IotaTauIota => "ιτι",
            DihedralElement::Mirror => "τιτι",
        }
    }

    /// Image of the R-generator index `i`.
    pub fn permute(self, i: i8) -> i8 {
        self.letters()
            .iter()
            .rev()
            .fold(i, |j, &is_iota| lookup(if is_iota { &IOTA } else { &TAU }, j))
    }

    /// The permutation as `(i, image)` pairs over the eight R-generators.
    pub fn permutation(self) -> [(i8, i8); 8] {
        Variable::R_GENERATORS.map(|i| (i, self.permute(i)))
    }

    /// Odd elements send t5 to t-5 = P - t5.
    pub fn is_odd(self) -> bool {
        self.letters().len() % 2 == 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: DihedralElement) -> DihedralElement {
        let target = Variable::R_GENERATORS.map(|i| self.permute(other.permute(i)));
        Self::ALL
            .into_iter()
            .find(|g| g.permutation().map(|(_, v)| v) == target)
            .expect("group is closed")
    }

    pub fn order(self) -> usize {
        let mut g = self;
        let mut n = 1;
        while g != DihedralElement::Id {
            g = g.compose(self);
            n += 1;
        }
        n
    }

    /// The induced automorphism of the free group, applied to a rank-2 word.
    pub fn apply_to_word(self, w: &Word) -> Result<Word, WordError> {
        self.letters()
            .iter()
            .rev()
            .try_fold(w.clone(), |acc, &is_iota| if is_iota { acc.iota() } else { acc.tau() })
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DihedralElement {
    type Err = RingError;

    /// Accepts the Greek names and ASCII spellings such as `iota`, `tau-iota`
    /// or `ti`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ascii: String = s
            .replace("iota", "i")
            .replace("tau", "t")
            .replace('ι', "i")
            .replace('τ', "t")
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect();
        let found = match ascii.as_str() {
            "id" | "e" | "1" => DihedralElement::Id,
            "i" => DihedralElement::Iota,
            "t" => DihedralElement::Tau,
            "it" => DihedralElement::IotaTau,
            "ti" => DihedralElement::TauIota,
            "tit" => DihedralElement::TauIotaTau,
            "iti" => DihedralElement::IotaTauIota,
            "titi" | "mirror" => DihedralElement::Mirror,
            _ => return Err(RingError::UnknownDihedral(s.to_string())),
        };
        Ok(found)
    }
}

use DihedralElement as D;

/// Row `g`, column `h` holds `g ∘ h`; rows and columns in `ALL` order.
pub const PRINTED_CAYLEY: [[DihedralElement; 8]; 8] = [
    [D::Id, D::Iota, D::Tau, D::IotaTau, D::TauIota, D::TauIotaTau, D::IotaTauIota, D::Mirror],
    [D::Iota, D::Id, D::IotaTau, D::Tau, D::IotaTauIota, D::Mirror, D::TauIota, D::TauIotaTau],
    [D::Tau, D::TauIota, D::Id, D::TauIotaTau, D::Iota, D::IotaTau, D::Mirror, D::IotaTauIota],
    [D::IotaTau, D::IotaTauIota, D::Iota, D::Mirror, D::Id, D::Tau, D::TauIotaTau, D::TauIota],
    [D::TauIota, D::Tau, D::TauIotaTau, D::Id, D::Mirror, D::IotaTauIota, D::Iota, D::IotaTau],
    [D::TauIotaTau, D::Mirror, D::TauIota, D::IotaTauIota, D::Tau, D::Id, D::IotaTau, D::Iota],
    [D::IotaTauIota, D::IotaTau, D::Mirror, D::Iota, D::TauIotaTau, D::TauIota, D::Id, D::Tau],
    [D::Mirror, D::TauIotaTau, D::IotaTauIota, D::TauIota, D::IotaTau, D::Iota, D::Tau, D::Id],
];

/// All eight elements.
pub fn dihedral_group() -> [DihedralElement; 8] {
    DihedralElement::ALL
}

/// Ring automorphism induced by `g`: permutes t(±1..±4); odd elements send
/// t5 to P - t5 and t-5 to t5.
pub fn apply_dihedral(g: DihedralElement, f: &Polynomial) -> Polynomial {
    let odd = g.is_odd();
    f.substitute_with(|v| match v {
        Variable::T(i) if i.abs() <= 4 => Some(Polynomial::t(g.permute(*i))),
        Variable::T(5) if odd => Some(poly_p() - &Polynomial::t(5)),
        Variable::T(-5) if odd => Some(Polynomial::t(5)),
        _ => None,
    })
}

/// Sum of the eight images of `f`, which must lie in R.
pub fn symmetrizer(f: &Polynomial) -> Result<Polynomial, RingError> {
    if let Some(v) = f.variables().into_iter().find(|v| !matches!(v, Variable::T(i) if i.abs() <= 4)) {
        return Err(RingError::VariableOutOfSubring(v.to_string()));
    }
    Ok(DihedralElement::ALL
        .iter()
        .fold(Polynomial::zero(), |acc, g| &acc + &apply_dihedral(*g, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::ring::{poly_q, small_p, small_q};
    use DihedralElement::*;
    const ALL: [DihedralElement; 8] = DihedralElement::ALL;

    #[test]
    fn cayley_table() {
        for (r, g) in ALL.iter().enumerate() {
            for (c, h) in ALL.iter().enumerate() {
                assert_eq!(g.compose(*h), PRINTED_CAYLEY[r][c], "{g} ∘ {h}");
            }
        }
    }

    #[test]
    fn orders_and_cycles() {
        assert_eq!(TauIota.order(), 4);
        assert_eq!(Iota.order(), 2);
        assert_eq!(Mirror.compose(Mirror), Id);
        // (1,2,-1,-2)(3,-4,-3,4)
        let it = Iota.compose(Tau);
        assert_eq!(it, IotaTau);
        for (a, b) in [(1, 2), (2, -1), (-1, -2), (-2, 1), (3, -4), (-4, -3), (-3, 4), (4, 3)] {
            assert_eq!(it.permute(a), b);
        }
        for i in Variable::R_GENERATORS {
            assert_eq!(Mirror.permute(i), -i);
        }
    }

    #[test]
    fn generated_by_iota_and_tau() {
        let mut seen = vec![Id];
        let mut frontier = vec![Id];
        while let Some(g) = frontier.pop() {
            for s in [Iota, Tau] {
                let h = s.compose(g);
                if !seen.contains(&h) {
                    seen.push(h);
                    frontier.push(h);
                }
            }
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn action_examples() {
        assert_eq!(apply_dihedral(Iota, &Polynomial::t(3)), Polynomial::t(-4));
        assert_eq!(apply_dihedral(Tau, &Polynomial::t(4)), Polynomial::t(-4));
        assert_eq!(apply_dihedral(Tau, &Polynomial::t(5)), poly_p() - &Polynomial::t(5));
        assert_eq!(apply_dihedral(Mirror, &Polynomial::t(5)), Polynomial::t(5));
    }

    #[test]
    fn action_is_a_homomorphism() {
        let f: Polynomial = "t1*t-3^2 + 2*t4*t-2 - t5".parse().unwrap();
        for g in ALL {
            for h in ALL {
                let lhs = apply_dihedral(g.compose(h), &f);
                let rhs = apply_dihedral(g, &apply_dihedral(h, &f));
                assert_eq!(crate::ring::normal_form(&lhs), crate::ring::normal_form(&rhs));
            }
        }
    }

    #[test]
    fn every_element_fixes_p_and_q() {
        for g in ALL {
            assert_eq!(&apply_dihedral(g, poly_p()), poly_p(), "{g}");
            assert_eq!(&apply_dihedral(g, poly_q()), poly_q(), "{g}");
        }
    }

    #[test]
    fn symmetrizer_identities() {
        assert_eq!(symmetrizer(small_p()).unwrap() - Polynomial::from_int(3), poly_p().clone());
        assert_eq!(symmetrizer(small_q()).unwrap() + Polynomial::from_int(9), poly_q().clone());
        assert_eq!(symmetrizer(&Polynomial::one()).unwrap(), Polynomial::constant(int(8)));
        assert!(matches!(symmetrizer(&Polynomial::t(5)), Err(RingError::VariableOutOfSubring(_))));
    }

    #[test]
    fn names_parse() {
        for g in ALL {
            assert_eq!(g.name().parse::<DihedralElement>().unwrap(), g);
        }
        assert_eq!("tau-iota".parse::<DihedralElement>().unwrap(), TauIota);
        assert!("x".parse::<DihedralElement>().is_err());
    }

    #[test]
    fn word_action_matches_ring_action_on_generators() {
        use crate::ring::generator_word;
        for g in ALL {
            for i in Variable::R_GENERATORS {
                let img = g.apply_to_word(&generator_word(i)).unwrap().cyclic_reduce();
                assert_eq!(img, generator_word(g.permute(i)).cyclic_reduce(), "{g} on t{i}");
            }
        }
    }
}
