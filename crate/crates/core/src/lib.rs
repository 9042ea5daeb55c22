//! Depth and Stanley depth of square-free monomial ideals, computed exactly.
//!
//! * [`ideal`], [`poset`], [`family`]: ideals as antichains of bitset monomials,
//!   the divisibility poset `P_I`, and the named example ideals.
//! * [`homology`]: depth via Hochster's formula, with a Koszul-complex oracle.
//! * [`sdepth`]: Stanley depth by exhaustive interval-partition search.
//! * [`verify`]: threshold checks, family checks and exhaustive sweeps.
//! * [`cli`]: the `sfdepth` command-line front end.

pub mod cli;
pub mod error;
pub mod family;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod poset;
pub mod sdepth;
pub mod verify;

pub use error::{Error, Result};
pub use homology::{depth_ideal, FieldSpec};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use poset::Poset;
