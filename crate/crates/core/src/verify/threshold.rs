//! The degree-`d` counting threshold and the comparison against `C(n, d+1)`.
//!
//! For `I` generated in degrees `>= d`, if
//! `rho_d(I) > ((n - d) / (n - d + 1)) * C(n, d)` then `depth I <= d`; since
//! such an ideal always has depth `>= d`, the depth is exactly `d`. All
//! comparisons are done on cross-multiplied integers.

use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::homology::{depth_ideal, FieldSpec};
use crate::ideal::Ideal;
use crate::monomial::binomial;

/// `((n - d) / (n - d + 1)) * C(n, d)` as a reduced fraction.
pub fn threshold(n: usize, d: usize) -> (u128, u128) {
    reduce((n - d) as u128 * binomial(n, d), (n - d + 1) as u128)
}

fn reduce(num: u128, den: u128) -> (u128, u128) {
    let g = num.gcd(&den).max(1);
    (num / g, den / g)
}

/// `rho * (n - d + 1) > (n - d) * C(n, d)`.
pub fn threshold_exceeded(n: usize, d: usize, rho: u128) -> bool {
    rho * (n - d + 1) as u128 > (n - d) as u128 * binomial(n, d)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub d: usize,
    pub rho: u128,
    pub threshold_num: u128,
    pub threshold_den: u128,
    pub triggered: bool,
    pub depth_found: usize,
    /// `!triggered || depth_found == d`.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prop1Check {
    Report(ThresholdReport),
    /// `I` is degenerate, `d` is out of range, or some generator has degree `< d`.
    NotApplicable,
}

impl Prop1Check {
    pub fn report(&self) -> Option<&ThresholdReport> {
        match self {
            Prop1Check::Report(r) => Some(r),
            Prop1Check::NotApplicable => None,
        }
    }
}

/// Evaluates the threshold for `I` at degree `d` and compares with the
/// computed depth.
pub fn prop1_check(ideal: &Ideal, d: usize, field: FieldSpec) -> Result<Prop1Check> {
    let applicable =
        ideal.is_proper_nonzero() && d >= 1 && d <= ideal.n() && ideal.min_degree().is_some_and(|m| m >= d);
    if !applicable {
        return Ok(Prop1Check::NotApplicable);
    }
    let depth_found = depth_ideal(ideal, field)?;
    threshold_report(ideal, d, depth_found).map(Prop1Check::Report)
}

/// The threshold report for an already computed depth. The caller ensures
/// applicability.
pub(crate) fn threshold_report(ideal: &Ideal, d: usize, depth_found: usize) -> Result<ThresholdReport> {
    let n = ideal.n();
    let rho = ideal.rho(d)?;
    let (threshold_num, threshold_den) = threshold(n, d);
    let triggered = threshold_exceeded(n, d, rho);
    Ok(ThresholdReport {
        n,
        d,
        rho,
        threshold_num,
        threshold_den,
        triggered,
        depth_found,
        consistent: !triggered || depth_found == d,
    })
}

/// One row of the comparison `((n-d)/(n-d+1)) C(n,d)` versus `C(n, d+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdComparison {
    pub n: usize,
    pub d: usize,
    pub left_num: u128,
    pub left_den: u128,
    pub right: u128,
    /// `left >= right`.
    pub holds: bool,
    pub equal: bool,
    /// The closed-form prediction `2d >= n` for `holds`.
    pub predicted: bool,
}

pub fn compare_threshold(n: usize, d: usize) -> ThresholdComparison {
    assert!(d >= 1 && d < n, "comparison needs 1 <= d < n");
    let (left_num, left_den) = threshold(n, d);
    let right = binomial(n, d + 1);
    let lhs = left_num;
    let rhs = right * left_den;
    ThresholdComparison { n, d, left_num, left_den, right, holds: lhs >= rhs, equal: lhs == rhs, predicted: 2 * d >= n }
}

/// All rows for `2 <= n <= max_n`, `1 <= d < n`.
pub fn remark_st_threshold_probe(max_n: usize) -> Vec<ThresholdComparison> {
    (2..=max_n).flat_map(|n| (1..n).map(move |d| compare_threshold(n, d))).collect()
}
