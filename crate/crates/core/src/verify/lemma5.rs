//! Depths of the cyclic families: `depth L_n = n - 1` and `depth I_n = n - 2`,
//! together with the colon identity `(L_n : x_n) = (I_n : x_n) = L_{n-1} S`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{family_i, family_l};
use crate::homology::{depth_ideal, FieldSpec, HOCHSTER_MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Row {
    pub n: usize,
    pub depth_l: usize,
    pub depth_i: usize,
    /// `None` for `n = 3`, where `L_{n-1}` is not defined.
    pub colon_identity: Option<bool>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Report {
    pub field: FieldSpec,
    pub rows: Vec<Lemma5Row>,
}

impl Lemma5Report {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    /// Fails naming the first `n` whose row does not match.
    pub fn ensure(&self) -> Result<()> {
        match self.rows.iter().find(|r| !r.passed) {
            None => Ok(()),
            Some(r) => Err(Error::Verification(format!(
                "n={}: depth L_n={} (want {}), depth I_n={} (want {}), colon identity {:?}",
                r.n,
                r.depth_l,
                r.n - 1,
                r.depth_i,
                r.n - 2,
                r.colon_identity
            ))),
        }
    }
}

fn colon_identity(n: usize) -> Result<bool> {
    let lower = family_l(n - 1)?.extend_to(n)?;
    Ok(family_l(n)?.colon_by_var(n)? == lower && family_i(n)?.colon_by_var(n)? == lower)
}

pub fn lemma5_check(n_max: usize, field: FieldSpec) -> Result<Lemma5Report> {
    if n_max < 3 {
        return Err(Error::Argument(format!("n_max must be at least 3, got {n_max}")));
    }
    if n_max > HOCHSTER_MAX_VARS {
        return Err(Error::Capability { what: "cyclic family depth check", limit: HOCHSTER_MAX_VARS, n: n_max });
    }
    let rows = (3..=n_max)
        .map(|n| {
            let depth_l = depth_ideal(&family_l(n)?, field)?;
            let depth_i = depth_ideal(&family_i(n)?, field)?;
            let colon = if n >= 4 { Some(colon_identity(n)?) } else { None };
            Ok(Lemma5Row {
                n,
                depth_l,
                depth_i,
                colon_identity: colon,
                passed: depth_l == n - 1 && depth_i == n - 2 && colon != Some(false),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Lemma5Report { field, rows })
}
