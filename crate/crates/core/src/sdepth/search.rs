//! Exact-cover search for interval partitions with all tops of degree `>= d`.
//!
//! Only poset elements of degree `< d` must be covered by nontrivial
//! intervals; everything left over of degree `>= d` becomes a singleton. The
//! search always extends the lowest uncovered element (by degree, then mask),
//! which must be the bottom of its interval. Candidate tops are tried in
//! ascending degree, then ascending mask.
//!
//! [`SearchMode::Truncated`] only allows tops of degree exactly `d`, and prunes
//! with a per-degree counting bound. [`SearchMode::Full`] allows every top
//! degree in `d..=n` and is kept as the reference the truncated kernel is
//! checked against.

use crate::error::{Error, Result};
use crate::monomial::{binomial, full_mask, submasks, Monomial};
use crate::poset::Poset;

use super::partition::{Interval, IntervalPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchMode {
    #[default]
    Truncated,
    Full,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Abort after this many interval placements. `None` searches to completion.
    pub node_budget: Option<u64>,
}

impl SearchConfig {
    pub fn full() -> Self {
        SearchConfig { mode: SearchMode::Full, node_budget: None }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(IntervalPartition),
    /// The search space was exhausted: no such partition exists.
    Infeasible,
    /// The node budget ran out before a decision.
    Unknown {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

enum Step {
    Found,
    Exhausted,
    Aborted,
}

struct Solver<'a> {
    poset: &'a Poset,
    d: usize,
    max_top: usize,
    prune: bool,
    full: u32,
    covered: Vec<bool>,
    /// Uncovered poset elements per degree `0..=d`.
    uncovered: Vec<i64>,
    /// Masks of degree `< d`, in poset order.
    required: Vec<u32>,
    chosen: Vec<Interval>,
    nodes: u64,
    budget: Option<u64>,
}

impl<'a> Solver<'a> {
    fn new(poset: &'a Poset, d: usize, config: SearchConfig) -> Self {
        let n = poset.n();
        let mut uncovered = vec![0i64; d + 1];
        for m in poset.elements() {
            if m.degree() <= d {
                uncovered[m.degree()] += 1;
            }
        }
        let required = poset.elements().iter().filter(|m| m.degree() < d).map(|m| m.mask()).collect();
        let (max_top, prune) = match config.mode {
            SearchMode::Truncated => (d, true),
            SearchMode::Full => (n, false),
        };
        Solver {
            poset,
            d,
            max_top,
            prune,
            full: full_mask(n),
            covered: vec![false; 1 << n],
            uncovered,
            required,
            chosen: Vec::new(),
            nodes: 0,
            budget: config.node_budget,
        }
    }

    /// Counting bound for tops of degree exactly `d`: an interval with bottom
    /// in degree `j` meets degree `k` in `C(d - j, k - j)` elements, so the
    /// number of new intervals per bottom degree is forced level by level.
    fn counts_feasible(&self) -> bool {
        let d = self.d;
        let mut bottoms = vec![0i64; d];
        for k in 0..d {
            let through: i64 = (0..k).map(|j| bottoms[j] * binomial(d - j, k - j) as i64).sum();
            bottoms[k] = self.uncovered[k] - through;
            if bottoms[k] < 0 {
                return false;
            }
        }
        bottoms.iter().sum::<i64>() <= self.uncovered[d]
    }

    fn all_free(&self, bottom: u32, extra: u32) -> bool {
        submasks(extra).all(|s| !self.covered[(bottom | s) as usize])
    }

    fn mark(&mut self, bottom: u32, extra: u32, value: bool) {
        for s in submasks(extra) {
            let w = (bottom | s) as usize;
            self.covered[w] = value;
            let deg = w.count_ones() as usize;
            if deg <= self.d {
                self.uncovered[deg] += if value { -1 } else { 1 };
            }
        }
    }

    fn dfs(&mut self, start: usize) -> Step {
        let Some(offset) = self.required[start..].iter().position(|&m| !self.covered[m as usize]) else {
            return Step::Found;
        };
        let at = start + offset;
        if self.prune && !self.counts_feasible() {
            return Step::Exhausted;
        }
        let x = self.required[at];
        let free = self.full & !x;
        let free_bits: Vec<u32> = Monomial::from_mask(free).vars().map(|v| 1u32 << (v - 1)).collect();
        let deg_x = x.count_ones() as usize;
        for top_deg in self.d..=self.max_top {
            let k = top_deg - deg_x;
            if k > free_bits.len() {
                break;
            }
            for pick in crate::monomial::subsets_of_size(free_bits.len(), k) {
                let extra = spread(pick, &free_bits);
                if !self.all_free(x, extra) {
                    continue;
                }
                self.nodes += 1;
                if self.budget.is_some_and(|b| self.nodes > b) {
                    return Step::Aborted;
                }
                self.mark(x, extra, true);
                self.chosen.push(Interval::new(Monomial::from_mask(x), Monomial::from_mask(x | extra)).unwrap());
                match self.dfs(at + 1) {
                    Step::Exhausted => {}
                    other => return other,
                }
                self.chosen.pop();
                self.mark(x, extra, false);
            }
        }
        Step::Exhausted
    }

    fn certificate(&self) -> IntervalPartition {
        let mut intervals = self.chosen.clone();
        intervals.extend(
            self.poset.elements().iter().filter(|m| !self.covered[m.mask() as usize]).map(|&m| Interval::singleton(m)),
        );
        IntervalPartition::new(intervals)
    }
}

/// Maps a subset of positions `0..bits.len()` to the union of those bits.
fn spread(pick: u32, bits: &[u32]) -> u32 {
    let mut out = 0;
    let mut rest = pick;
    while rest != 0 {
        out |= bits[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    out
}

/// Decides whether `poset` has an interval partition whose tops all have
/// degree `>= d`. A negative answer is only given after exhaustive search.
pub fn exists_partition_with(poset: &Poset, d: usize, config: SearchConfig) -> Result<SearchOutcome> {
    if d == 0 || d > poset.n() {
        return Err(Error::Argument(format!("target degree d={d} outside 1..={}", poset.n())));
    }
    let mut solver = Solver::new(poset, d, config);
    Ok(match solver.dfs(0) {
        Step::Found => SearchOutcome::Found(solver.certificate()),
        Step::Exhausted => SearchOutcome::Infeasible,
        Step::Aborted => SearchOutcome::Unknown { nodes: solver.nodes },
    })
}

/// [`exists_partition_with`] using the truncated kernel and no budget.
pub fn exists_partition(poset: &Poset, d: usize) -> Result<Option<IntervalPartition>> {
    match exists_partition_with(poset, d, SearchConfig::default())? {
        SearchOutcome::Found(p) => Ok(Some(p)),
        SearchOutcome::Infeasible => Ok(None),
        SearchOutcome::Unknown { .. } => unreachable!("no budget was set"),
    }
}
