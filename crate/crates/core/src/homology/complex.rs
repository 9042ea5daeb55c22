//! Finite simplicial complexes on `{1..n}` and their reduced homology.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{full_mask, submasks, Monomial};
use crate::poset::POSET_MAX_VARS;

use super::field::FieldSpec;
use super::rank::SparseMatrix;

/// A downward-closed family of faces on a vertex set.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. The two have different reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    vertices: Monomial,
    /// Sorted by `(size, mask)`.
    faces: Vec<Monomial>,
}

/// Ranks of `H~_k` for `-1 <= k <= dim`, over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReducedHomology {
    /// `ranks[k + 1]` is the rank of `H~_k`.
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn rank(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.ranks.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// `(k, rank)` pairs with nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks.iter().enumerate().filter(|(_, &r)| r > 0).map(|(s, &r)| (s as isize - 1, r))
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `sum_k (-1)^k rank H~_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.ranks.iter().enumerate().map(|(s, &r)| if s % 2 == 1 { r as i64 } else { -(r as i64) }).sum()
    }
}

impl SimplicialComplex {
    /// Builds a complex from an explicit face list, checking downward closure.
    pub fn from_faces<I: IntoIterator<Item = Monomial>>(n: usize, vertices: Monomial, faces: I) -> Result<Self> {
        let mut faces: Vec<Monomial> = faces.into_iter().collect();
        faces.sort_by_key(|f| (f.degree(), f.mask()));
        faces.dedup();
        for f in &faces {
            if !f.divides(vertices) {
                return Err(Error::Argument(format!("face {f} is not on the vertex set {vertices}")));
            }
            for g in f.divisors() {
                if faces.binary_search_by_key(&(g.degree(), g.mask()), |h| (h.degree(), h.mask())).is_err() {
                    return Err(Error::Argument(format!("face {f} present but its subset {g} is not")));
                }
            }
        }
        Ok(SimplicialComplex { n, vertices, faces })
    }

    /// The downward closure of the given facets on vertex set `{1..n}`.
    pub fn from_facets<I: IntoIterator<Item = Monomial>>(n: usize, facets: I) -> Self {
        let mut faces: Vec<Monomial> = facets.into_iter().flat_map(|f| f.divisors()).collect();
        faces.sort_by_key(|f| (f.degree(), f.mask()));
        faces.dedup();
        SimplicialComplex { n, vertices: Monomial::full(n), faces }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, vertices: Monomial::full(n), faces: Vec::new() }
    }

    /// The Stanley-Reisner complex: subsets of `{1..n}` whose monomial is not in `I`.
    pub fn stanley_reisner(ideal: &Ideal) -> Result<Self> {
        ideal.require_proper("Stanley-Reisner complex")?;
        let n = ideal.n();
        if n > POSET_MAX_VARS {
            return Err(Error::Capability { what: "Stanley-Reisner complex", limit: POSET_MAX_VARS, n });
        }
        let mut faces: Vec<Monomial> =
            submasks(full_mask(n)).map(Monomial::from_mask).filter(|&m| !ideal.contains(m)).collect();
        faces.sort_by_key(|f| (f.degree(), f.mask()));
        Ok(SimplicialComplex { n, vertices: Monomial::full(n), faces })
    }

    /// `Delta|_sigma`: faces contained in `sigma`, on vertex set `sigma`.
    pub fn restrict(&self, sigma: Monomial) -> Self {
        let faces = self.faces.iter().copied().filter(|f| f.divides(sigma)).collect();
        SimplicialComplex { n: self.n, vertices: sigma, faces }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Monomial {
        self.vertices
    }

    pub fn faces(&self) -> &[Monomial] {
        &self.faces
    }

    pub fn contains(&self, f: Monomial) -> bool {
        self.faces.binary_search_by_key(&(f.degree(), f.mask()), |h| (h.degree(), h.mask())).is_ok()
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.faces.len() == 1 && self.faces[0].is_one()
    }

    /// Dimension, `-1` for the irrelevant complex and `None` for the void one.
    pub fn dim(&self) -> Option<isize> {
        self.faces.last().map(|f| f.degree() as isize - 1)
    }

    /// Maximal faces, sorted by mask.
    pub fn facets(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Vec::new();
        for (k, f) in self.faces.iter().enumerate() {
            if !self.faces[k + 1..].iter().any(|g| g.degree() > f.degree() && f.divides(*g)) {
                out.push(*f);
            }
        }
        out.sort();
        out
    }

    /// Face counts by size: `f[s]` counts faces with `s` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.faces.last().map_or(0, |f| f.degree() + 1);
        let mut f = vec![0; top];
        for face in &self.faces {
            f[face.degree()] += 1;
        }
        f
    }

    /// Reduced homology over `field`, with the empty face in degree `-1`.
    pub fn reduced_homology(&self, field: FieldSpec) -> ReducedHomology {
        if self.faces.is_empty() {
            return ReducedHomology::default();
        }
        let top = self.faces.last().unwrap().degree();
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for f in &self.faces {
            by_size[f.degree()].push(f.mask());
        }
        // by_size[s] is sorted by mask because faces are sorted by (size, mask)
        let boundary_ranks: Vec<usize> = (0..=top + 1)
            .map(|s| if s == 0 || s > top { 0 } else { boundary(&by_size[s], &by_size[s - 1]).rank(field) })
            .collect();
        let ranks = (0..=top).map(|s| by_size[s].len() - boundary_ranks[s] - boundary_ranks[s + 1]).collect();
        ReducedHomology { ranks }
    }
}

/// Simplicial boundary from faces of size `s` to faces of size `s - 1`:
/// removing the `t`-th smallest vertex carries sign `(-1)^t`.
fn boundary(upper: &[u32], lower: &[u32]) -> SparseMatrix {
    let mut m = SparseMatrix::new(lower.len());
    for &face in upper {
        let mut col = Vec::with_capacity(face.count_ones() as usize);
        let mut rest = face;
        let mut t = 0;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            let row = lower.binary_search(&(face ^ bit)).expect("complex is downward closed");
            col.push((row as u32, if t % 2 == 0 { 1 } else { -1 }));
            rest ^= bit;
            t += 1;
        }
        m.push_col(col);
    }
    m
}
