//! Square-free monomials as bitsets over the variables `x_1..x_n`.
//!
//! Bit `i - 1` of the mask stands for `x_i`. All user-facing text uses
//! 1-based indices, e.g. `{1,2}` for `x_1 x_2`; the empty set is the monomial 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ambient variable count representable by [`Monomial`].
pub const MAX_VARS: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    #[inline]
    pub const fn from_mask(mask: u32) -> Self {
        Monomial(mask)
    }

    #[inline]
    pub const fn mask(self) -> u32 {
        self.0
    }

    /// Builds a monomial from 1-based variable indices. Repeats are rejected,
    /// since they would not be square-free.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Result<Self> {
        let mut mask = 0u32;
        for v in vars {
            if v == 0 || v > MAX_VARS {
                return Err(Error::Argument(format!("variable index {v} outside 1..={MAX_VARS}")));
            }
            let bit = 1u32 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::Argument(format!("variable x{v} repeated")));
            }
            mask |= bit;
        }
        Ok(Monomial(mask))
    }

    /// The product `x_1 ... x_n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        Monomial(full_mask(n))
    }

    #[inline]
    pub fn var(i: usize) -> Self {
        debug_assert!((1..=MAX_VARS).contains(&i));
        Monomial(1 << (i - 1))
    }

    #[inline]
    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_one(self) -> bool {
        self.0 == 0
    }

    /// `self | other` as monomials, i.e. set inclusion of supports.
    #[inline]
    pub const fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn contains_var(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    /// lcm of two square-free monomials.
    #[inline]
    pub const fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// `self / other` with `other` removed from the support.
    #[inline]
    pub const fn without(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    /// Largest variable index present, 0 for the monomial 1.
    pub fn max_var(self) -> usize {
        (u32::BITS - self.0.leading_zeros()) as usize
    }

    /// 1-based variable indices in ascending order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        })
    }

    /// All monomials dividing `self`, in ascending mask order.
    pub fn divisors(self) -> impl Iterator<Item = Monomial> {
        submasks(self.0).map(Monomial)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vars().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for v in self.vars() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `{i,j,...}` with strictly ascending 1-based indices.
    fn from_str(s: &str) -> Result<Self> {
        let (m, used) = parse_monomial(s, 0)?;
        if used != s.len() {
            return Err(Error::Parse { pos: used, msg: "trailing input after monomial".into() });
        }
        Ok(m)
    }
}

/// Parses one `{...}` monomial starting at `s[0]`; `offset` is the byte position
/// of `s` in the enclosing input, used for error reporting. Returns the monomial
/// and the number of bytes consumed.
pub(crate) fn parse_monomial(s: &str, offset: usize) -> Result<(Monomial, usize)> {
    let err = |at: usize, msg: &str| Error::Parse { pos: offset + at, msg: msg.to_string() };
    if !s.starts_with('{') {
        return Err(err(0, "expected '{'"));
    }
    let close = s.find('}').ok_or_else(|| err(0, "unterminated monomial, expected '}'"))?;
    let body = &s[1..close];
    let mut mask = 0u32;
    let mut last = 0usize;
    if !body.trim().is_empty() {
        let mut at = 1;
        for tok in body.split(',') {
            let t = tok.trim();
            let v: usize = t.parse().map_err(|_| err(at, &format!("bad variable index {t:?}")))?;
            if v == 0 || v > MAX_VARS {
                return Err(err(at, &format!("variable index {v} outside 1..={MAX_VARS}")));
            }
            if v <= last {
                return Err(err(at, "variable indices must be strictly ascending"));
            }
            last = v;
            mask |= 1 << (v - 1);
            at += tok.len() + 1;
        }
    }
    Ok((Monomial(mask), close + 1))
}

#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Submasks of `mask` in ascending numeric order, including 0 and `mask`.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
        Some(cur)
    })
}

/// All `k`-subsets of `{1..n}` as masks, ascending (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    assert!(n <= MAX_VARS && k <= n);
    let limit: u64 = 1u64 << n;
    let mut cur: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur as u32;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// Binomial coefficient, exact in `u128` for every `n <= 64`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
