//! The retarded Duhamel operator and its dyadic pieces `T_δ`.

mod forcing;
mod kernel;
mod lines;
mod probe;
mod result;
mod scale;
mod tdelta;
mod timestep;

pub use forcing::{Mode, ModeForcing};
pub use kernel::{bessel_scaled, kernel_k_delta, sphere_fourier, RadialKernel};
pub use probe::{
    annulus_random_field, check_probe_pair, probe_input_norm, probe_point, probe_predicted_slope, tdelta_scaling_probe, ProbePoint,
    ProbeResult,
};
pub use result::{DuhamelResult, LowerLimit, Method, Truncation};
pub use scale::DyadicScale;
pub use tdelta::{dyadic_synthesis, dyadic_synthesis_with, t_delta_apply, t_delta_apply_with, t_delta_oracle, t_delta_timeside};
pub use timestep::{duhamel_timestep, TimestepOptions};
