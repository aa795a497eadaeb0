//! Exact exponent geometry and FFT space-time experiments for inhomogeneous
//! Strichartz estimates of the Schrödinger equation.
//!
//! * [`geometry`] — exact rational regions, necessary conditions, feasible
//!   time exponents and classification.
//! * [`spectral`] — periodic grids, fields, the free propagator, mixed norms
//!   and the dyadic bump.
//! * [`duhamel`] — the retarded Duhamel operator and its dyadic pieces `T_δ`.
//! * [`counterexamples`] — Knapp, traveling-tube and scaling families with
//!   their predicted power laws.
//! * [`harness`] — sweep configs, slope fitting and reports.

pub mod error;
pub mod geometry;

pub use error::{Error, Result};
pub mod spectral;
pub mod duhamel;
pub mod counterexamples;
pub mod harness;
