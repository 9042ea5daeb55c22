//! Multigraded Betti numbers of `I` from restrictions of its Stanley-Reisner
//! complex, and depth through Auslander-Buchsbaum.
//!
//! `beta_{i,sigma}(I) = rank H~_{|sigma| - i - 2}(Delta|_sigma)` for square-free
//! `sigma`; square-free monomial ideals have no other nonzero multidegrees.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{full_mask, submasks, Monomial};

use super::complex::SimplicialComplex;
use super::field::FieldSpec;

/// Practical bound for Hochster-based computations (`2^n` restrictions).
pub const HOCHSTER_MAX_VARS: usize = 12;

/// Nonzero multigraded Betti numbers `beta_{i,sigma}(I)` of the ideal (not of `S/I`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub(crate) fn from_entries(n: usize, field: FieldSpec, entries: BTreeMap<(usize, Monomial), usize>) -> Self {
        debug_assert!(entries.values().all(|&r| r > 0));
        BettiTable { n, field, entries }
    }

    pub fn get(&self, i: usize, sigma: Monomial) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// `((i, sigma), rank)` for every nonzero entry, ordered by `i` then mask.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, Monomial), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti numbers `beta_i = sum_sigma beta_{i,sigma}`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.projdim().map_or(0, |p| p + 1)];
        for (&(i, _), &r) in &self.entries {
            out[i] += r;
        }
        out
    }

    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `depth_S I = n - projdim(I)`.
    pub fn depth(&self) -> Option<usize> {
        self.projdim().map(|p| self.n - p)
    }
}

pub(crate) fn check_bound(ideal: &Ideal, what: &'static str, limit: usize) -> Result<()> {
    if ideal.n() > limit {
        Err(Error::Capability { what, limit, n: ideal.n() })
    } else {
        Ok(())
    }
}

pub fn hochster_betti(ideal: &Ideal, field: FieldSpec) -> Result<BettiTable> {
    ideal.require_proper("Betti table")?;
    check_bound(ideal, "Hochster Betti numbers", HOCHSTER_MAX_VARS)?;
    let delta = SimplicialComplex::stanley_reisner(ideal)?;
    let sigmas: Vec<u32> = submasks(full_mask(ideal.n())).collect();
    let per_sigma: Vec<Vec<((usize, Monomial), usize)>> = sigmas
        .par_iter()
        .map(|&s| {
            let sigma = Monomial::from_mask(s);
            let size = sigma.degree() as isize;
            delta
                .restrict(sigma)
                .reduced_homology(field)
                .nonzero()
                .filter_map(|(k, r)| {
                    let i = size - k - 2;
                    (i >= 0).then_some(((i as usize, sigma), r))
                })
                .collect()
        })
        .collect();
    Ok(BettiTable::from_entries(ideal.n(), field, per_sigma.into_iter().flatten().collect()))
}

/// `depth_S I`, in `1..=n` for every nonzero proper ideal.
pub fn depth_ideal(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    let table = hochster_betti(ideal, field)?;
    Ok(table.depth().expect("a nonzero ideal has beta_0 != 0"))
}

/// `depth_S S/I = depth_S I - 1`.
pub fn depth_quotient(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    depth_ideal(ideal, field).map(|d| d - 1)
}
