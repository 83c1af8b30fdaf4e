use std::cmp::Ordering;
use std::fmt;

use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    S,
    T,
    A,
    C,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::S => "s",
            Param::T => "t",
            Param::A => "a",
            Param::C => "c",
        }
    }
}

/// Polynomial indeterminate.
///
/// `T(i)` for i in ±1..±5 are the character-ring generators; `Lam(j)` are
/// eigenvalue symbols; `Param` are free scalar parameters; `TraceSym` is the
/// formal trace of a (cyclically reduced) word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    T(i8),
    Lam(u8),
    Param(Param),
    TraceSym(Word),
}

impl Variable {
    pub fn t(i: i8) -> Variable {
        debug_assert!(i != 0 && i.abs() <= 5);
        Variable::T(i)
    }

    /// The eight generators of the subring R, in canonical order.
    pub const R_GENERATORS: [i8; 8] = [1, -1, 2, -2, 3, -3, 4, -4];

    fn class(&self) -> u8 {
        match self {
            Variable::T(_) => 0,
            Variable::Lam(_) => 1,
            Variable::Param(_) => 2,
            Variable::TraceSym(_) => 3,
        }
    }
}

fn t_index(i: i8) -> u8 {
    // t1 < t-1 < t2 < t-2 < ... < t5 < t-5
    2 * (i.unsigned_abs() - 1) + u8::from(i < 0)
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Variable::T(a), Variable::T(b)) => t_index(*a).cmp(&t_index(*b)),
            (Variable::Lam(a), Variable::Lam(b)) => a.cmp(b),
            (Variable::Param(a), Variable::Param(b)) => a.cmp(b),
            (Variable::TraceSym(a), Variable::TraceSym(b)) => a.cmp(b),
            _ => self.class().cmp(&other.class()),
        }
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::T(i) => write!(f, "t{}", i),
            Variable::Lam(j) => write!(f, "L{}", j),
            Variable::Param(p) => f.write_str(p.name()),
            Variable::TraceSym(w) => write!(f, "tr({})", w),
        }
    }
}
