//! Exhaustive and sampled streams of square-free monomial ideals.
//!
//! # Sampling scheme
//!
//! [`sample_ideals`] seeds a `ChaCha8Rng` with `seed` (via `seed_from_u64`).
//! For each ideal it draws a generator count `k` uniformly from `1..=n`, then
//! `k` monomials uniformly (with replacement) from the square-free monomials of
//! degree `>= max(min_degree, 1)`, and minimizes. Duplicate ideals may occur.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{full_mask, submasks, Monomial};

/// Full antichain enumeration is limited to this many variables
/// (the count grows like the Dedekind numbers: 7581 antichains at n = 5).
pub const ENUMERATE_MAX_VARS: usize = 5;

fn eligible(n: usize, min_degree: usize) -> Vec<u32> {
    let lo = min_degree.max(1) as u32;
    submasks(full_mask(n)).filter(|m| m.count_ones() >= lo).collect()
}

/// Every nonzero proper square-free ideal of `K[x_1..x_n]` whose minimal
/// generators all have degree `>= min_degree`, each exactly once, ordered by
/// the ascending list of generator masks.
pub fn enumerate_ideals(n: usize, min_degree: usize) -> Result<Vec<Ideal>> {
    if n > ENUMERATE_MAX_VARS {
        return Err(Error::Capability {
            what: "exhaustive ideal enumeration (use sampling)",
            limit: ENUMERATE_MAX_VARS,
            n,
        });
    }
    let candidates = eligible(n, min_degree);
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    extend(&candidates, 0, &mut current, &mut out);
    out.sort();
    out.into_iter().map(|gens| Ideal::minimize(n, gens.into_iter().map(Monomial::from_mask))).collect()
}

fn extend(candidates: &[u32], from: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if !current.is_empty() {
        out.push(current.clone());
    }
    for k in from..candidates.len() {
        let c = candidates[k];
        if current.iter().all(|&g| g & c != g && g & c != c) {
            current.push(c);
            extend(candidates, k + 1, current, out);
            current.pop();
        }
    }
}

/// `count` pseudo-random ideals, bit-for-bit reproducible from `seed`.
pub fn sample_ideals(n: usize, count: usize, seed: u64, min_degree: usize) -> Result<Vec<Ideal>> {
    if n == 0 {
        return Err(Error::Argument("sampling needs n >= 1".into()));
    }
    if min_degree > n {
        return Err(Error::Argument(format!("min_degree {min_degree} exceeds n={n}")));
    }
    let pool = eligible(n, min_degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=n);
            let gens: Vec<Monomial> = (0..k).map(|_| Monomial::from_mask(pool[rng.gen_range(0..pool.len())])).collect();
            Ideal::minimize(n, gens)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_by_hand() {
        let all = enumerate_ideals(2, 1).unwrap();
        let shown: Vec<String> = all.iter().map(|i| i.to_text()).collect();
        assert_eq!(shown, ["n=2 {1}", "n=2 {1} {2}", "n=2 {2}", "n=2 {1,2}"]);
    }

    #[test]
    fn top_degree_only() {
        let all = enumerate_ideals(3, 3).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_text(), "n=3 {1,2,3}");
    }

    #[test]
    fn dedekind_counts_minus_trivial() {
        // brute force over all families of nonempty subsets
        fn brute(n: usize) -> usize {
            let subsets: Vec<u32> = (1..(1u32 << n)).collect();
            let mut count = 0;
            for fam in 1u64..(1u64 << subsets.len()) {
                let chosen: Vec<u32> = (0..subsets.len()).filter(|&k| fam >> k & 1 == 1).map(|k| subsets[k]).collect();
                let antichain = chosen.iter().all(|&a| chosen.iter().all(|&b| a == b || (a & b != a && a & b != b)));
                count += antichain as usize;
            }
            count
        }
        for n in 1..=4 {
            assert_eq!(enumerate_ideals(n, 0).unwrap().len(), brute(n), "n={n}");
        }
        assert_eq!(enumerate_ideals(3, 1).unwrap().len(), 18);
        assert_eq!(enumerate_ideals(4, 1).unwrap().len(), 166);
        assert_eq!(enumerate_ideals(5, 1).unwrap().len(), 7579);
    }

    #[test]
    fn enumeration_is_exactly_once_and_filtered() {
        let all = enumerate_ideals(4, 2).unwrap();
        let mut seen = std::collections::HashSet::new();
        for i in &all {
            assert!(i.min_degree().unwrap() >= 2);
            assert!(seen.insert(i.clone()));
        }
        assert!(matches!(enumerate_ideals(6, 1), Err(Error::Capability { limit: 5, .. })));
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_ideals(6, 1000, 42, 1).unwrap();
        let b = sample_ideals(6, 1000, 42, 1).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_ideals(6, 1000, 43, 1).unwrap());
        for i in &a {
            assert!(i.is_proper_nonzero());
            for g in i.gens() {
                assert!(i.gens().iter().all(|h| h == g || !h.divides(*g)));
            }
        }
        assert!(sample_ideals(4, 50, 7, 3).unwrap().iter().all(|i| i.min_degree().unwrap() >= 3));
    }
}
