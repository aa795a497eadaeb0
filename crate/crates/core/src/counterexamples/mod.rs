//! Test-function families whose Duhamel norm quotients follow predicted
//! power laws: the Knapp cap, the traveling tube and parabolic rescaling.

pub mod cache;
mod exponents;
mod knapp;
mod scaling;
mod smooth;
mod tube;

pub use exponents::{predicted_exponents, Family, PredictedExponents};
pub use knapp::{knapp_field, knapp_grid, knapp_measure, knapp_region_mask, knapp_time_profile, KnappMeasurement, KnappParams};
pub use scaling::{scaling_family, scaling_measure, ScalingMeasurement};
pub use smooth::{smooth_indicator, smooth_step};
pub use tube::{tube_field, tube_grid, tube_measure, tube_phase_bound, tube_region_mask, TubeMeasurement, TubeParams};

use crate::error::Result;
use crate::geometry::ExponentConfig;
use crate::spectral::{mixed_norm_masked, Field, MixedNormSpec};

/// `‖F‖_{L^{r̃′}_x L^{q̃′}_t}` and `‖u‖_{L^r_x L^q_t}` norm specs of `c`.
pub fn norm_specs(c: &ExponentConfig) -> Result<(MixedNormSpec, MixedNormSpec)> {
    Ok((
        MixedNormSpec::from_reciprocals(c.inv_rt_prime(), c.inv_qt_prime)?,
        MixedNormSpec::from_reciprocals(c.inv_r(), c.inv_q)?,
    ))
}

/// Input norm of `f`, output norm of `u` (optionally restricted) and their
/// quotient.
pub(crate) fn norms(f: &Field, u: &Field, c: &ExponentConfig, mask: Option<&[bool]>) -> Result<(f64, f64)> {
    let (input, output) = norm_specs(c)?;
    Ok((mixed_norm_masked(f, input, None)?, mixed_norm_masked(u, output, mask)?))
}
