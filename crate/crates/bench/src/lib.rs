//! Shared fixtures for the benchmarks.

use baxter_core::yetter_drinfeld::{smash_projection_right, SmashProjection, YDModuleCoalgebra};
use baxter_core::{builtin, Result};

/// `C×H` with its right projection, for `H` acting adjointly on itself.
pub fn smash_fixture(hopf: &str) -> Result<SmashProjection> {
    smash_projection_right(&YDModuleCoalgebra::adjoint(&builtin(hopf)?)?)
}

/// Hopf algebras of increasing size used across the benchmarks.
pub const HOPF_SIZES: [&str; 3] = ["group:C2", "sweedler4", "group:S3"];
