//! Independent depth oracle: `Tor_i(I, K)` read off the Koszul complex
//! `K(x_1..x_n) (x) I` one square-free multidegree at a time.
//!
//! In multidegree `sigma` the chain group in homological degree `i` has basis
//! `e_tau (x) x^{sigma \ tau}` for `tau` a subset of `sigma` with `|tau| = i` and
//! `x^{sigma \ tau}` in `I`; the differential sends `e_tau` to
//! `sum_j (-1)^{pos(j, tau)} x_j e_{tau \ j}`. Only ideal membership is used,
//! no Stanley-Reisner complex and no restriction.

use rayon::prelude::*;

use crate::error::Result;
use crate::ideal::Ideal;
use crate::monomial::{full_mask, submasks, Monomial};

use super::field::FieldSpec;
use super::hochster::check_bound;
use super::rank::SparseMatrix;

/// Default bound for the oracle.
pub const KOSZUL_MAX_VARS: usize = 8;

/// `dim_K Tor_i(I, K)_sigma` for `i = 0..=|sigma|`.
pub fn koszul_tor(ideal: &Ideal, sigma: Monomial, field: FieldSpec) -> Vec<usize> {
    let s = sigma.mask();
    let size = sigma.degree();
    // chains[i]: tau with |tau| = i and sigma \ tau in I, ascending by mask
    let mut chains: Vec<Vec<u32>> = vec![Vec::new(); size + 1];
    for tau in submasks(s) {
        if ideal.contains(Monomial::from_mask(s & !tau)) {
            chains[tau.count_ones() as usize].push(tau);
        }
    }
    let mut d_rank = vec![0usize; size + 2];
    for i in 1..=size {
        if chains[i].is_empty() || chains[i - 1].is_empty() {
            continue;
        }
        let mut m = SparseMatrix::new(chains[i - 1].len());
        for &tau in &chains[i] {
            let mut col = Vec::new();
            for (pos, j) in Monomial::from_mask(tau).vars().enumerate() {
                let face = tau & !(1 << (j - 1));
                let row = chains[i - 1].binary_search(&face).expect("x_j times an element of I stays in I");
                col.push((row as u32, if pos % 2 == 0 { 1 } else { -1 }));
            }
            m.push_col(col);
        }
        d_rank[i] = m.rank(field);
    }
    (0..=size).map(|i| chains[i].len() - d_rank[i] - d_rank[i + 1]).collect()
}

/// Projective dimension from Koszul homology over all square-free multidegrees.
pub fn koszul_projdim(ideal: &Ideal, field: FieldSpec, max_vars: usize) -> Result<usize> {
    ideal.require_proper("Koszul depth")?;
    check_bound(ideal, "Koszul depth oracle", max_vars)?;
    let n = ideal.n();
    let pd = submasks(full_mask(n))
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|&&s| ideal.contains(Monomial::from_mask(s)))
        .filter_map(|&s| {
            let tor = koszul_tor(ideal, Monomial::from_mask(s), field);
            tor.iter().rposition(|&r| r > 0)
        })
        .max();
    Ok(pd.expect("a nonzero ideal has Tor_0 != 0"))
}

/// Depth of `I` via the Koszul oracle, bounded by [`KOSZUL_MAX_VARS`].
pub fn koszul_depth_oracle(ideal: &Ideal, field: FieldSpec) -> Result<usize> {
    koszul_depth_oracle_bounded(ideal, field, KOSZUL_MAX_VARS)
}

pub fn koszul_depth_oracle_bounded(ideal: &Ideal, field: FieldSpec, max_vars: usize) -> Result<usize> {
    Ok(ideal.n() - koszul_projdim(ideal, field, max_vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::family;

    #[test]
    fn example1_tor() {
        let i = family::example1();
        assert_eq!(koszul_tor(&i, Monomial::from_vars([1, 2]).unwrap(), FieldSpec::GF2), vec![1, 0, 0]);
        assert_eq!(koszul_tor(&i, Monomial::full(3), FieldSpec::GF2), vec![0, 1, 0, 0]);
        assert_eq!(koszul_tor(&i, Monomial::from_vars([1, 3]).unwrap(), FieldSpec::GF2), vec![0, 0, 0]);
    }

    #[test]
    fn oracle_matches_known_depths() {
        assert_eq!(koszul_depth_oracle(&family::example1(), FieldSpec::GF2).unwrap(), 2);
        assert_eq!(koszul_depth_oracle(&family::family_i(4).unwrap(), FieldSpec::GF2).unwrap(), 2);
        assert_eq!(koszul_depth_oracle(&family::family_l(5).unwrap(), FieldSpec::GF2).unwrap(), 4);
    }

    #[test]
    fn maximal_ideal_koszul_resolution() {
        // Tor_i((x_1..x_n), K) lives in degree i + 1 with rank C(n, i + 1)
        let m = Ideal::maximal(4).unwrap();
        assert_eq!(koszul_tor(&m, Monomial::full(4), FieldSpec::RATIONALS), vec![0, 0, 0, 1, 0]);
        assert_eq!(koszul_depth_oracle(&m, FieldSpec::RATIONALS).unwrap(), 1);
    }

    #[test]
    fn bound_enforced() {
        let i = Ideal::maximal(9).unwrap();
        assert!(matches!(koszul_depth_oracle(&i, FieldSpec::GF2), Err(Error::Capability { limit: 8, .. })));
        assert_eq!(koszul_depth_oracle_bounded(&i, FieldSpec::GF2, 9).unwrap(), 1);
    }
}
