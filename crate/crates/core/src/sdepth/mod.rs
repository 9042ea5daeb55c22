//! Stanley depth of a square-free monomial ideal: the largest `d` such that
//! `P_I` splits into disjoint intervals `[u, v]` with every `deg v >= d`.

pub mod partition;
pub mod search;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::binomial;
use crate::poset::Poset;

pub use partition::{validate_partition, Interval, IntervalPartition};
pub use search::{exists_partition, exists_partition_with, SearchConfig, SearchMode, SearchOutcome};

/// Exact search is only attempted up to this many variables.
pub const SDEPTH_MAX_VARS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdepthOutcome {
    /// `value` is certified: `witness` reaches it and `value + 1` was refuted
    /// by exhaustive search (or `value = n`).
    Exact { value: usize, witness: IntervalPartition },
    /// The budget ran out while deciding `undecided`; `at_least` is certified.
    Unknown { at_least: usize, witness: IntervalPartition, undecided: usize },
}

impl SdepthOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SdepthOutcome::Exact { value, .. } => Some(*value),
            SdepthOutcome::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> &IntervalPartition {
        match self {
            SdepthOutcome::Exact { witness, .. } | SdepthOutcome::Unknown { witness, .. } => witness,
        }
    }
}

pub fn sdepth_with(ideal: &Ideal, config: SearchConfig) -> Result<SdepthOutcome> {
    ideal.require_proper("Stanley depth")?;
    if ideal.n() > SDEPTH_MAX_VARS {
        return Err(Error::Capability { what: "exact Stanley depth", limit: SDEPTH_MAX_VARS, n: ideal.n() });
    }
    let poset = Poset::of(ideal)?;
    let lowest = ideal.min_degree().expect("nonzero ideal");
    let mut witness: IntervalPartition = poset.elements().iter().map(|&m| Interval::singleton(m)).collect();
    let mut value = lowest;
    for d in lowest + 1..=ideal.n() {
        match exists_partition_with(&poset, d, config)? {
            SearchOutcome::Found(p) => {
                witness = p;
                value = d;
            }
            SearchOutcome::Infeasible => break,
            SearchOutcome::Unknown { .. } => {
                return Ok(SdepthOutcome::Unknown { at_least: value, witness, undecided: d });
            }
        }
    }
    Ok(SdepthOutcome::Exact { value, witness })
}

/// `sdepth_S I` by complete search with the truncated kernel.
pub fn sdepth(ideal: &Ideal) -> Result<usize> {
    Ok(sdepth_with(ideal, SearchConfig::default())?.value().expect("no budget was set"))
}

/// Outcome of the generator-count bound for ideals generated in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuBound {
    /// `mu(I) > C(n, d + 1)`, so `sdepth I = d`.
    Equals(usize),
    /// Generated in degree `d` but `mu(I) <= C(n, d + 1)`.
    NoConclusion { d: usize },
    /// Generators of mixed degree, or a degenerate ideal.
    NotApplicable,
}

/// For `I` generated by `mu(I)` monomials of degree `d`: if `mu(I) > C(n, d+1)`
/// there are too few degree-`(d+1)` monomials to lift every generator, so some
/// interval top stays in degree `d`.
pub fn sdepth_upper_bound_mu(ideal: &Ideal) -> MuBound {
    if !ideal.is_proper_nonzero() {
        return MuBound::NotApplicable;
    }
    match ideal.equigenerated_degree() {
        Some(d) if ideal.mu() as u128 > binomial(ideal.n(), d + 1) => MuBound::Equals(d),
        Some(d) => MuBound::NoConclusion { d },
        None => MuBound::NotApplicable,
    }
}
