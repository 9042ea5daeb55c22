use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field for homology: the rationals (characteristic 0) or `GF(p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec { characteristic: 2 };
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    /// `0` selects the rationals; anything else must be a prime below `2^31`.
    pub fn new(characteristic: u32) -> Result<FieldSpec> {
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::Argument(format!("field characteristic {characteristic} is not 0 or a prime")));
        }
        if characteristic >= 1 << 31 {
            return Err(Error::Argument(format!("characteristic {characteristic} too large")));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn prime(p: u32) -> Result<FieldSpec> {
        if p == 0 {
            return Err(Error::Argument("GF(0) is not a field".into()));
        }
        FieldSpec::new(p)
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ (char 0)"),
            p => write!(f, "GF({p})"),
        }
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `0`, `QQ`, a prime `p`, or `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("qq") || t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::RATIONALS);
        }
        let digits =
            t.strip_prefix("GF(").or_else(|| t.strip_prefix("gf(")).and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let c: u32 = digits.parse().map_err(|_| Error::Argument(format!("bad field {s:?}")))?;
        FieldSpec::new(c)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}
