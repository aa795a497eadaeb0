//! Periodic space-time discretisation.

pub mod bump;
pub mod fft;
mod field;
mod grid;
pub mod io;
mod norm;
mod projection;
mod propagator;

pub use bump::{build_bump, BumpConfig, BumpPhi};
pub use field::{Field, Side};
pub use grid::GridSpec;
pub use norm::{mixed_norm, mixed_norm_masked, slice_lp, LebesgueExponent, MixedNormSpec};
pub use projection::{spatial_annulus_projection, temporal_projection};
pub use propagator::{free_propagate, slice_l2, Propagator};
