//! Budgets and sweep bounds, plus the key-value configuration file.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Resource budgets. Exceeding one is a clean [`Error::Resource`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest exponent box `(bound + 1)^(n + 1)` an enumeration may scan.
    pub max_candidates: u64,
    /// Largest number of generator pairs a single product or intersection
    /// may form before canonicalization.
    pub max_intermediate: usize,
}

impl Default for Limits {
    /// Sized so that `n <= 6, m <= 12` fits: `13^7` is about 6.3e7.
    fn default() -> Self {
        Limits {
            max_candidates: 1 << 27,
            max_intermediate: 1 << 24,
        }
    }
}

/// Caps on parameters for which brute-force oracles may run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_n: usize,
    pub max_m: u32,
    pub max_r: u32,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_n: 4,
            max_m: 6,
            max_r: 6,
        }
    }
}

impl OracleBounds {
    pub fn check(&self, n: usize, m: u32, r: u32) -> Result<()> {
        let over = |what, needed: u128, limit: u128| {
            Err(Error::Resource {
                what,
                needed,
                limit,
            })
        };
        if n > self.max_n {
            return over("oracle n", n as u128, self.max_n as u128);
        }
        if m > self.max_m {
            return over("oracle m", m.into(), self.max_m.into());
        }
        if r > self.max_r {
            return over("oracle r", r.into(), self.max_r.into());
        }
        Ok(())
    }
}

/// Parameter ranges for the verification harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyBounds {
    /// Grid for exact predicate-vs-oracle sweeps.
    pub oracle: OracleBounds,
    /// Largest `m` for the two-route symbolic power comparison.
    pub symbolic_max_m: u32,
    /// Largest `r` for the closed-form ordinary power comparison.
    pub power_max_r: u32,
    /// Largest `m` in the triangle identities.
    pub triangle_max_m: u32,
    /// Largest `m` in the tetrahedron identities.
    pub tetrahedron_max_m: u32,
    /// Largest `k` in the complete-intersection checks.
    pub complete_intersection_max_k: u32,
    /// Largest `m` for the explicit generator-shape checks.
    pub generator_form_max_m: u32,
    /// Largest `n` in closed-form-only sweeps.
    pub closed_form_max_n: usize,
    /// Largest `m, r` in closed-form-only sweeps.
    pub closed_form_max: u32,
    /// Side of the `(m, r)` box for the resurgence sweeps.
    pub resurgence_box: u32,
    pub witness_max_k: u32,
    /// Grid for the symbolic-to-symbolic sufficiency check.
    pub symbolic_pair_max_n: usize,
    pub symbolic_pair_max: u32,
}

impl VerifyBounds {
    pub fn standard(oracle: OracleBounds) -> Self {
        VerifyBounds {
            oracle,
            symbolic_max_m: 5,
            power_max_r: 4,
            triangle_max_m: 4,
            tetrahedron_max_m: 3,
            complete_intersection_max_k: 5,
            generator_form_max_m: 8,
            closed_form_max_n: 6,
            closed_form_max: 12,
            resurgence_box: 30,
            witness_max_k: 100,
            symbolic_pair_max_n: 3,
            symbolic_pair_max: 5,
        }
    }

    /// Widened ranges; the oracle caps grow by at least one step each.
    pub fn deep(oracle: OracleBounds) -> Self {
        let oracle = OracleBounds {
            max_n: oracle.max_n.max(5),
            max_m: oracle.max_m.max(8),
            max_r: oracle.max_r.max(8),
        };
        VerifyBounds {
            oracle,
            symbolic_max_m: 7,
            power_max_r: 6,
            triangle_max_m: 6,
            tetrahedron_max_m: 4,
            complete_intersection_max_k: 8,
            generator_form_max_m: 12,
            closed_form_max_n: 8,
            closed_form_max: 24,
            resurgence_box: 60,
            witness_max_k: 1000,
            symbolic_pair_max_n: 4,
            symbolic_pair_max: 6,
        }
    }
}

impl Default for VerifyBounds {
    fn default() -> Self {
        Self::standard(OracleBounds::default())
    }
}

/// Contents of a configuration file. Every key is optional; the file is
/// TOML restricted to flat `key = value` pairs.
///
/// ```toml
/// max_candidates = 100000000
/// max_intermediate = 1000000
/// format = "json"
/// oracle_max_n = 4
/// oracle_max_m = 6
/// oracle_max_r = 6
/// deep = false
/// ```
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_candidates: Option<u64>,
    pub max_intermediate: Option<usize>,
    pub format: Option<String>,
    pub oracle_max_n: Option<usize>,
    pub oracle_max_m: Option<u32>,
    pub oracle_max_r: Option<u32>,
    pub deep: Option<bool>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("config file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
