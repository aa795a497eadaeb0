use num_complex::Complex64;

use super::fft::{fft_all, Direction};
use super::grid::GridSpec;

/// Precomputed `|ξ|²` lattice for repeated propagation of spatial slices.
#[derive(Debug, Clone)]
pub struct Propagator {
    counts: Vec<usize>,
    xi_sq: Vec<f64>,
}

impl Propagator {
    pub fn new(grid: &GridSpec) -> Self {
        Self { counts: grid.counts.clone(), xi_sq: grid.xi_sq() }
    }

    pub fn xi_sq(&self) -> &[f64] {
        &self.xi_sq
    }

    /// Applies `e^{−it|ξ|²}` to a slice that is already in spatial frequency.
    pub fn apply_symbol(&self, hat: &mut [Complex64], t: f64) {
        for (v, &k2) in hat.iter_mut().zip(&self.xi_sq) {
            *v *= Complex64::from_polar(1.0, -t * k2);
        }
    }

    pub fn forward(&self, slice: &mut [Complex64]) {
        fft_all(slice, &self.counts, Direction::Forward);
    }

    pub fn inverse(&self, slice: &mut [Complex64]) {
        fft_all(slice, &self.counts, Direction::Inverse);
    }

    /// `e^{itΔ}` on a physical-side slice, in place.
    pub fn propagate(&self, slice: &mut [Complex64], t: f64) {
        if t == 0.0 {
            return;
        }
        self.forward(slice);
        self.apply_symbol(slice, t);
        self.inverse(slice);
    }
}

/// The free propagator `e^{itΔ}` (symbol `e^{−it|ξ|²}`) applied to one
/// physical-side spatial slice.
pub fn free_propagate(grid: &GridSpec, slice: &[Complex64], t: f64) -> Vec<Complex64> {
    let mut out = slice.to_vec();
    Propagator::new(grid).propagate(&mut out, t);
    out
}

/// Discrete `L²(dx)` norm of a spatial slice.
pub fn slice_l2(grid: &GridSpec, slice: &[Complex64]) -> f64 {
    (slice.iter().map(|v| v.norm_sqr()).sum::<f64>() * grid.cell_volume()).sqrt()
}
