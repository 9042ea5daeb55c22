//! Exact depth computation for square-free monomial ideals.
//!
//! The primary route builds the Stanley-Reisner complex, reads multigraded
//! Betti numbers off restricted complexes and converts projective dimension
//! to depth. [`koszul`] recomputes the same Tor modules from the Koszul
//! complex as an independent check.

pub mod complex;
pub mod field;
pub mod hochster;
pub mod koszul;
pub mod rank;

pub use complex::{ReducedHomology, SimplicialComplex};
pub use field::FieldSpec;
pub use hochster::{depth_ideal, depth_quotient, hochster_betti, BettiTable, HOCHSTER_MAX_VARS};
pub use koszul::{koszul_depth_oracle, koszul_depth_oracle_bounded, KOSZUL_MAX_VARS};
pub use rank::SparseMatrix;
