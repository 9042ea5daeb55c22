//! Exact matrix rank over `GF(2)`, `GF(p)` and `Q`.
//!
//! All three routines share the same incremental echelon scheme: columns are
//! reduced one at a time against the basis built so far, where each stored
//! basis vector is already reduced against every earlier pivot. A single pass
//! in insertion order therefore clears all known pivots. No floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::field::FieldSpec;

/// A sparse integer matrix stored by columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    /// Appends a column given as `(row, value)` pairs; zero values are dropped.
    pub fn push_col(&mut self, mut entries: Vec<(u32, i64)>) {
        debug_assert!(entries.iter().all(|&(r, _)| (r as usize) < self.rows));
        entries.retain(|&(_, v)| v != 0);
        self.cols.push(entries);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols.is_empty() {
            return 0;
        }
        match field.characteristic() {
            0 => rank_rational(self),
            2 => rank_gf2(self),
            p => rank_gfp(self, p as u64),
        }
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut v = vec![0u64; words];
    for col in &m.cols {
        v.iter_mut().for_each(|w| *w = 0);
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r as usize / 64] ^= 1 << (r % 64);
            }
        }
        for (pivot, b) in &basis {
            if v[pivot / 64] >> (pivot % 64) & 1 == 1 {
                v.iter_mut().zip(b).for_each(|(a, b)| *a ^= b);
            }
        }
        if let Some(k) = v.iter().position(|&w| w != 0) {
            let pivot = k * 64 + v[k].trailing_zeros() as usize;
            basis.push((pivot, v.clone()));
            if basis.len() == m.rows {
                break;
            }
        }
    }
    basis.len()
}

fn rank_gfp(m: &SparseMatrix, p: u64) -> usize {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut v = vec![0u64; m.rows];
    for col in &m.cols {
        v.iter_mut().for_each(|x| *x = 0);
        for &(r, x) in col {
            v[r as usize] = (v[r as usize] + x.rem_euclid(p as i64) as u64) % p;
        }
        for (pivot, b) in &basis {
            let c = v[*pivot];
            if c != 0 {
                // basis vectors are normalized to 1 at their pivot
                for (a, &bi) in v.iter_mut().zip(b) {
                    if bi != 0 {
                        *a = (*a + p - c * bi % p) % p;
                    }
                }
            }
        }
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = mod_inv(v[pivot], p);
            let b: Vec<u64> = v.iter().map(|&x| x * inv % p).collect();
            basis.push((pivot, b));
            if basis.len() == m.rows {
                break;
            }
        }
    }
    basis.len()
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Fraction-free elimination over the integers: `v <- b[p] v - v[p] b`,
/// followed by division by the content of `v` to bound coefficient growth.
fn rank_rational(m: &SparseMatrix) -> usize {
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in &m.cols {
        let mut v = vec![BigInt::zero(); m.rows];
        for &(r, x) in col {
            v[r as usize] += x;
        }
        for (pivot, b) in &basis {
            let c = v[*pivot].clone();
            if !c.is_zero() {
                let lead = &b[*pivot];
                for (a, bi) in v.iter_mut().zip(b) {
                    *a = &*a * lead - &c * bi;
                }
                normalize_content(&mut v);
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            basis.push((pivot, v));
            if basis.len() == m.rows {
                break;
            }
        }
    }
    basis.len()
}

fn normalize_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if !g.is_zero() && g.abs() != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}
