//! The divisibility poset `P_I` of all square-free monomials of an ideal.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{full_mask, Monomial};

/// Largest `n` for which [`Poset`] materializes the subset lattice.
pub const POSET_MAX_VARS: usize = 16;

const ABSENT: u32 = u32::MAX;

/// All square-free monomials of a nonzero proper ideal, ordered by
/// `(degree, mask)`, with an index over the full `2^n` lattice.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    elements: Vec<Monomial>,
    index: Vec<u32>,
}

impl Poset {
    pub fn of(ideal: &Ideal) -> Result<Poset> {
        ideal.require_proper("poset")?;
        let n = ideal.n();
        if n > POSET_MAX_VARS {
            return Err(Error::Capability { what: "poset materialization", limit: POSET_MAX_VARS, n });
        }
        let size = 1usize << n;
        let mut member = vec![false; size];
        // Upward closure from the generators, sweeping masks in increasing order.
        for g in ideal.gens() {
            member[g.mask() as usize] = true;
        }
        for m in 0..size {
            if member[m] {
                let mut free = full_mask(n) & !(m as u32);
                while free != 0 {
                    let b = free & free.wrapping_neg();
                    member[m | b as usize] = true;
                    free &= free - 1;
                }
            }
        }
        let mut elements: Vec<Monomial> =
            (0..size as u32).filter(|&m| member[m as usize]).map(Monomial::from_mask).collect();
        elements.sort_by_key(|m| (m.degree(), m.mask()));
        let mut index = vec![ABSENT; size];
        for (k, m) in elements.iter().enumerate() {
            index[m.mask() as usize] = k as u32;
        }
        Ok(Poset { n, elements, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements sorted by `(degree, mask)`.
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, m: Monomial) -> bool {
        (m.mask() as usize) < self.index.len() && self.index[m.mask() as usize] != ABSENT
    }

    /// Position of `m` in [`Poset::elements`].
    #[inline]
    pub fn position(&self, m: Monomial) -> Option<usize> {
        let k = *self.index.get(m.mask() as usize)?;
        (k != ABSENT).then_some(k as usize)
    }

    /// Element count per degree, indexed `0..=n`.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for m in &self.elements {
            counts[m.degree()] += 1;
        }
        counts
    }

    pub fn min_degree(&self) -> usize {
        self.elements.first().map_or(0, |m| m.degree())
    }
}
