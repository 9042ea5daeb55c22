//! Sweeps over many ideals. Each sweep evaluates ideals independently in
//! parallel and collects results in input order, so reports do not depend on
//! scheduling.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::homology::{depth_ideal, koszul_depth_oracle, FieldSpec};
use crate::ideal::Ideal;
use crate::sdepth::{sdepth_upper_bound_mu, sdepth_with, MuBound, SdepthOutcome, SearchConfig, SearchMode};

use super::enumerate::enumerate_ideals;
use super::threshold::{threshold_report, ThresholdReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdWitness {
    pub ideal: Ideal,
    pub report: ThresholdReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthWitness {
    pub ideal: Ideal,
    pub min_degree: usize,
    pub depth: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Prop1Sweep {
    /// `(n, number of ideals)` for each swept `n`.
    pub ideals_per_n: Vec<(usize, usize)>,
    /// Applicable `(I, d)` pairs.
    pub checks: usize,
    pub triggered: usize,
    pub inconsistencies: Vec<ThresholdWitness>,
    /// Ideals with depth below their least generator degree.
    pub lower_bound_violations: Vec<DepthWitness>,
}

impl Prop1Sweep {
    pub fn ideals(&self) -> usize {
        self.ideals_per_n.iter().map(|&(_, c)| c).sum()
    }

    pub fn passed(&self) -> bool {
        self.inconsistencies.is_empty() && self.lower_bound_violations.is_empty()
    }
}

/// Checks the threshold statement and the depth lower bound on every ideal
/// with `1 <= n <= max_n` and every `d` up to its least generator degree.
pub fn prop1_sweep(max_n: usize, field: FieldSpec) -> Result<Prop1Sweep> {
    let mut sweep = Prop1Sweep::default();
    for n in 1..=max_n {
        let ideals = enumerate_ideals(n, 1)?;
        sweep.ideals_per_n.push((n, ideals.len()));
        let per_ideal: Vec<(Vec<ThresholdReport>, Option<DepthWitness>)> = ideals
            .par_iter()
            .map(|ideal| {
                let depth = depth_ideal(ideal, field)?;
                let low = ideal.min_degree().expect("enumerated ideals are nonzero");
                let reports = (1..=low).map(|d| threshold_report(ideal, d, depth)).collect::<Result<Vec<_>>>()?;
                let violation = (depth < low).then(|| DepthWitness { ideal: ideal.clone(), min_degree: low, depth });
                Ok((reports, violation))
            })
            .collect::<Result<_>>()?;
        for (ideal, (reports, violation)) in ideals.iter().zip(per_ideal) {
            sweep.checks += reports.len();
            for r in reports {
                sweep.triggered += r.triggered as usize;
                if !r.consistent {
                    sweep.inconsistencies.push(ThresholdWitness { ideal: ideal.clone(), report: r });
                }
            }
            sweep.lower_bound_violations.extend(violation);
        }
    }
    Ok(sweep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyWitness {
    pub ideal: Ideal,
    pub depth: usize,
    pub sdepth: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StanleySweep {
    pub checked: usize,
    /// `sdepth < depth`.
    pub counterexamples: Vec<StanleyWitness>,
    /// Searches that ran out of budget.
    pub unknown: Vec<StanleyWitness>,
    /// Ideals where the generator-count bound applied.
    pub mu_bound_applied: usize,
    /// Ideals where the bound gave `d` but the search disagreed.
    pub mu_bound_violations: Vec<StanleyWitness>,
}

impl StanleySweep {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.unknown.is_empty() && self.mu_bound_violations.is_empty()
    }
}

/// Compares Stanley depth with depth on each ideal; also checks the
/// generator-count bound wherever it applies.
pub fn stanley_sweep(ideals: &[Ideal], field: FieldSpec, config: SearchConfig) -> Result<StanleySweep> {
    let rows: Vec<(StanleyWitness, MuBound)> = ideals
        .par_iter()
        .map(|ideal| {
            let depth = depth_ideal(ideal, field)?;
            let sdepth = sdepth_with(ideal, config)?.value();
            Ok((StanleyWitness { ideal: ideal.clone(), depth, sdepth }, sdepth_upper_bound_mu(ideal)))
        })
        .collect::<Result<_>>()?;
    let mut sweep = StanleySweep { checked: rows.len(), ..Default::default() };
    for (w, bound) in rows {
        if let MuBound::Equals(d) = bound {
            sweep.mu_bound_applied += 1;
            if w.sdepth.is_some_and(|s| s != d) {
                sweep.mu_bound_violations.push(w.clone());
            }
        }
        match w.sdepth {
            None => sweep.unknown.push(w),
            Some(s) if s < w.depth => sweep.counterexamples.push(w),
            Some(_) => {}
        }
    }
    Ok(sweep)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub ideal: Ideal,
    pub primary: Option<usize>,
    pub reference: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AgreementSweep {
    pub checked: usize,
    pub disagreements: Vec<Disagreement>,
}

impl AgreementSweep {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn from_pairs(ideals: &[Ideal], pairs: Vec<(Option<usize>, Option<usize>)>) -> Self {
        let disagreements = ideals
            .iter()
            .zip(pairs)
            .filter(|(_, (a, b))| a != b)
            .map(|(ideal, (primary, reference))| Disagreement { ideal: ideal.clone(), primary, reference })
            .collect();
        AgreementSweep { checked: ideals.len(), disagreements }
    }
}

/// Hochster depth against the Koszul oracle.
pub fn oracle_sweep(ideals: &[Ideal], field: FieldSpec) -> Result<AgreementSweep> {
    let pairs = ideals
        .par_iter()
        .map(|ideal| {
            let primary = depth_ideal(ideal, field)?;
            let reference = koszul_depth_oracle(ideal, field)?;
            Ok((Some(primary), Some(reference)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AgreementSweep::from_pairs(ideals, pairs))
}

/// Truncated-kernel Stanley depth against the untruncated search.
pub fn truncation_sweep(ideals: &[Ideal]) -> Result<AgreementSweep> {
    let value = |ideal: &Ideal, mode| -> Result<Option<usize>> {
        Ok(match sdepth_with(ideal, SearchConfig { mode, node_budget: None })? {
            SdepthOutcome::Exact { value, .. } => Some(value),
            SdepthOutcome::Unknown { .. } => None,
        })
    };
    let pairs = ideals
        .par_iter()
        .map(|ideal| Ok((value(ideal, SearchMode::Truncated)?, value(ideal, SearchMode::Full)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AgreementSweep::from_pairs(ideals, pairs))
}
