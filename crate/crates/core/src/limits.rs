//! Size limits for the exact (exponential) searches.
//!
//! Limits are configuration: the defaults suit desk-scale inputs, and the
//! `MINORFORGE_LIMITS` environment variable can override any subset of them
//! with a JSON map such as `{"chi": 40, "zig": 7}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LIMITS_ENV: &str = "MINORFORGE_LIMITS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    /// Max vertex count for [`crate::bounds::chromatic_number`].
    pub chi: usize,
    /// Max vertex count for [`crate::bounds::zig`].
    pub zig: usize,
    /// Max ground-set size for [`crate::bounds::cd`].
    pub cd: usize,
    /// Max vertex count for the clique-minor and odd-clique-minor oracles.
    pub oracle: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            chi: 16,
            zig: 8,
            cd: 12,
            oracle: 8,
        }
    }
}

impl Limits {
    /// Defaults overridden by `MINORFORGE_LIMITS`, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(LIMITS_ENV) {
            Ok(raw) => Self::from_json(&raw),
            Err(std::env::VarError::NotPresent) => Ok(Self::default()),
            Err(e) => Err(Error::input(format!("{LIMITS_ENV}: {e}"))),
        }
    }

    pub fn from_json(raw: &str) -> Result<Self> {
        serde_json::from_str(raw).map_err(|e| Error::input(format!("{LIMITS_ENV}: {e}")))
    }

    /// All limits set to `n`.
    pub fn uniform(n: usize) -> Self {
        Limits {
            chi: n,
            zig: n,
            cd: n,
            oracle: n,
        }
    }
}
