//! Square-free monomial ideals stored by their minimal generators.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{self, Monomial, MAX_VARS};

/// A square-free monomial ideal of `S = K[x_1..x_n]`.
///
/// The generators always form an antichain under divisibility and are kept
/// sorted by mask, so two equal ideals compare equal structurally. The unit
/// ideal is flagged rather than stored as the generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    n: usize,
    gens: Vec<Monomial>,
    unit: bool,
}

/// Result of parsing the ideal text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: Ideal,
    /// Whether the input generators were already an antichain without repeats.
    pub was_minimal: bool,
}

impl Ideal {
    /// Normalizes `gens` to the inclusion-minimal antichain.
    ///
    /// A generator equal to 1 yields the unit ideal. Monomials using a variable
    /// beyond `n` are rejected.
    pub fn minimize<I: IntoIterator<Item = Monomial>>(n: usize, gens: I) -> Result<Ideal> {
        check_ambient(n)?;
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.max_var() > n) {
            return Err(Error::Argument(format!("generator {bad} uses a variable beyond n={n}")));
        }
        if gens.iter().any(|g| g.is_one()) {
            return Ok(Ideal::unit(n));
        }
        // Ascending degree means any divisor of g was already seen.
        gens.sort_by_key(|g| (g.degree(), g.mask()));
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(g)) {
                kept.push(g);
            }
        }
        kept.sort();
        Ok(Ideal { n, gens: kept, unit: false })
    }

    pub fn zero(n: usize) -> Ideal {
        Ideal { n, gens: Vec::new(), unit: false }
    }

    pub fn unit(n: usize) -> Ideal {
        Ideal { n, gens: Vec::new(), unit: true }
    }

    /// The ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Result<Ideal> {
        Ideal::minimize(n, (1..=n).map(Monomial::var))
    }

    /// Builds an ideal from 1-based index lists, e.g. `[[1, 2], [2, 3]]`.
    pub fn from_index_lists<I, V>(n: usize, gens: I) -> Result<Ideal>
    where
        I: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        let gens = gens.into_iter().map(Monomial::from_vars).collect::<Result<Vec<_>>>()?;
        Ideal::minimize(n, gens)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted by mask.
    #[inline]
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators, `mu(I)`. The unit ideal has `mu = 1`.
    pub fn mu(&self) -> usize {
        if self.unit {
            1
        } else {
            self.gens.len()
        }
    }

    pub fn is_zero(&self) -> bool {
        !self.unit && self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Ideals with `0 != I != S`, the setting depth and Stanley depth are defined in.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.unit && !self.gens.is_empty()
    }

    pub(crate) fn require_proper(&self, what: &'static str) -> Result<()> {
        if self.unit {
            Err(Error::Domain { op: what, kind: "unit" })
        } else if self.gens.is_empty() {
            Err(Error::Domain { op: what, kind: "zero" })
        } else {
            Ok(())
        }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// The common generator degree, if every generator has the same degree.
    pub fn equigenerated_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    /// Membership: some generator divides `m`.
    #[inline]
    pub fn contains(&self, m: Monomial) -> bool {
        debug_assert!(m.max_var() <= self.n);
        self.unit || self.gens.iter().any(|g| g.divides(m))
    }

    /// Number of square-free monomials of degree `d` lying in the ideal,
    /// counted by enumerating all `C(n, d)` candidates.
    pub fn rho(&self, d: usize) -> Result<u128> {
        if d > self.n {
            return Err(Error::Argument(format!("degree d={d} outside 0..={}", self.n)));
        }
        Ok(monomial::subsets_of_size(self.n, d).filter(|&m| self.contains(Monomial::from_mask(m))).count() as u128)
    }

    /// `(I : x_i)` with `x_i` removed from every generator, read as an ideal of
    /// the subring without `x_i`. The ambient `n` is kept; no generator of the
    /// result involves `x_i`.
    pub fn colon_by_var(&self, i: usize) -> Result<Ideal> {
        if i == 0 || i > self.n {
            return Err(Error::Argument(format!("variable index {i} outside 1..={}", self.n)));
        }
        if self.is_zero() {
            return Err(Error::Domain { op: "colon", kind: "zero" });
        }
        if self.unit {
            return Ok(self.clone());
        }
        let xi = Monomial::var(i);
        Ideal::minimize(self.n, self.gens.iter().map(|g| g.without(xi)))
    }

    /// The same generators read in a polynomial ring with `n` variables.
    pub fn extend_to(&self, n: usize) -> Result<Ideal> {
        if n < self.n {
            return Err(Error::Argument(format!("cannot shrink ambient n={} to {n}", self.n)));
        }
        check_ambient(n)?;
        Ok(Ideal { n, ..self.clone() })
    }

    pub fn same_ambient(&self, other: &Ideal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { expected: self.n, found: other.n })
        }
    }

    /// Parses the ideal text format: `n=<int>` followed by `{i,j,...}` generators.
    pub fn parse_text(s: &str) -> Result<ParsedIdeal> {
        let bytes = s.as_bytes();
        let mut pos = skip_ws(bytes, 0);
        if !s[pos..].starts_with("n=") {
            return Err(Error::Parse { pos, msg: "expected leading token n=<int>".into() });
        }
        pos += 2;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let n: usize =
            s[start..pos].parse().map_err(|_| Error::Parse { pos: start, msg: "expected integer after n=".into() })?;
        if n > MAX_VARS {
            return Err(Error::Parse { pos: start, msg: format!("n={n} exceeds {MAX_VARS}") });
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            return Err(Error::Parse { pos, msg: "expected whitespace after n=<int>".into() });
        }
        let mut raw = Vec::new();
        loop {
            pos = skip_ws(bytes, pos);
            if pos >= bytes.len() {
                break;
            }
            let (m, used) = monomial::parse_monomial(&s[pos..], pos)?;
            if m.max_var() > n {
                return Err(Error::Parse { pos, msg: format!("generator {m} uses a variable beyond n={n}") });
            }
            raw.push(m);
            pos += used;
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(Error::Parse { pos, msg: "expected whitespace between generators".into() });
            }
        }
        let ideal = Ideal::minimize(n, raw.iter().copied())?;
        let was_minimal = !ideal.unit && raw.len() == ideal.gens.len();
        Ok(ParsedIdeal { ideal, was_minimal })
    }

    /// Canonical text form, accepted by [`Ideal::parse_text`]. The unit ideal
    /// prints as the generator `{}`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::Capability { what: "monomial representation", limit: MAX_VARS, n })
    } else {
        Ok(())
    }
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if self.unit {
            return f.write_str(" {}");
        }
        for g in &self.gens {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit {
            return write!(f, "S(n={})", self.n);
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ") in n={}", self.n)
    }
}

impl FromStr for Ideal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ideal> {
        Ideal::parse_text(s).map(|p| p.ideal)
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}
