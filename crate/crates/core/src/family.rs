//! Named ideals: the two worked examples and the cyclic families `L_n`, `I_n`.
//!
//! With `w = x_1 ... x_n`, put `f_i = w / (x_i x_{i+1})` for `1 <= i < n` and
//! `f_n = w / (x_1 x_n)`. Then `L_n = (f_1, ..., f_{n-1})` and `I_n = (L_n, f_n)`,
//! both generated in degree `n - 2`.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// `(x1x2, x2x3)` in three variables.
pub fn example1() -> Ideal {
    Ideal::from_index_lists(3, [[1, 2], [2, 3]]).expect("fixture is well formed")
}

/// The eight quadratic generators in five variables.
pub fn example2() -> Ideal {
    Ideal::from_index_lists(5, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 5], [3, 4], [3, 5], [4, 5]])
        .expect("fixture is well formed")
}

pub const FIXTURES: [&str; 2] = ["example1", "example2"];

pub fn fixture(name: &str) -> Result<Ideal> {
    match name {
        "example1" => Ok(example1()),
        "example2" => Ok(example2()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn cyclic_gen(n: usize, i: usize) -> Monomial {
    let j = if i == n { 1 } else { i + 1 };
    Monomial::full(n).without(Monomial::var(i)).without(Monomial::var(j))
}

fn check_family_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Argument(format!("family requires n >= 3, got {n}")));
    }
    if n > crate::monomial::MAX_VARS {
        return Err(Error::Capability { what: "family", limit: crate::monomial::MAX_VARS, n });
    }
    Ok(())
}

/// `L_n = (f_1, ..., f_{n-1})`.
pub fn family_l(n: usize) -> Result<Ideal> {
    check_family_n(n)?;
    Ideal::minimize(n, (1..n).map(|i| cyclic_gen(n, i)))
}

/// `I_n = (f_1, ..., f_n)`.
pub fn family_i(n: usize) -> Result<Ideal> {
    check_family_n(n)?;
    Ideal::minimize(n, (1..=n).map(|i| cyclic_gen(n, i)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    L,
    I,
}

impl FamilyKind {
    pub fn build(self, n: usize) -> Result<Ideal> {
        match self {
            FamilyKind::L => family_l(n),
            FamilyKind::I => family_i(n),
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" => Ok(FamilyKind::L),
            "I" | "i" => Ok(FamilyKind::I),
            _ => Err(Error::Argument(format!("unknown family {s:?}, expected L or I"))),
        }
    }
}

/// Parses a family spec such as `L:5` or `I:4`.
pub fn parse_family_spec(s: &str) -> Result<Ideal> {
    let (kind, n) =
        s.split_once(':').ok_or_else(|| Error::Argument(format!("family spec {s:?} must look like L:5 or I:4")))?;
    let n: usize = n.trim().parse().map_err(|_| Error::Argument(format!("bad family size in {s:?}")))?;
    kind.trim().parse::<FamilyKind>()?.build(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[usize]]) -> Ideal {
        Ideal::from_index_lists(n, gens.iter().map(|g| g.iter().copied())).unwrap()
    }

    #[test]
    fn base_case_n3() {
        assert_eq!(family_l(3).unwrap(), ideal(3, &[&[3], &[1]]));
        assert_eq!(family_i(3).unwrap(), ideal(3, &[&[1], &[2], &[3]]));
    }

    #[test]
    fn i4_expanded_by_hand() {
        // f1 = x3x4, f2 = x1x4, f3 = x1x2, f4 = x2x3
        assert_eq!(family_i(4).unwrap(), ideal(4, &[&[3, 4], &[1, 4], &[1, 2], &[2, 3]]));
    }

    #[test]
    fn generator_counts_and_degrees() {
        for n in 3..=12 {
            let l = family_l(n).unwrap();
            let i = family_i(n).unwrap();
            assert_eq!(l.mu(), n - 1);
            assert_eq!(i.mu(), n);
            assert_eq!(l.equigenerated_degree(), Some(n - 2));
            assert_eq!(i.equigenerated_degree(), Some(n - 2));
        }
    }

    #[test]
    fn small_n_rejected() {
        assert!(family_l(2).is_err());
        assert!(family_i(0).is_err());
    }

    #[test]
    fn fixtures() {
        let e1 = fixture("example1").unwrap();
        assert_eq!((e1.n(), e1.mu()), (3, 2));
        let e2 = fixture("example2").unwrap();
        assert_eq!((e2.n(), e2.mu()), (5, 8));
        assert_eq!(e2.to_text(), "n=5 {1,2} {1,3} {2,3} {1,4} {3,4} {2,5} {3,5} {4,5}");
        assert!(matches!(fixture("example3"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn family_specs() {
        assert_eq!(parse_family_spec("L:3").unwrap(), family_l(3).unwrap());
        assert_eq!(parse_family_spec("I:5").unwrap(), family_i(5).unwrap());
        assert!(parse_family_spec("X:5").is_err());
        assert!(parse_family_spec("L5").is_err());
    }
}
