use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform periodic space-time grid.
///
/// Spatial axis `a` samples `x = c_a + (i − N_a/2)·Δx_a`, `i = 0..N_a`, so the
/// spatial box is centred at `c_a` (the origin unless shifted); time samples `t = t₀ + j·Δt`,
/// `j = 0..N_t`, with `t₀ = 0` unless shifted. Field arrays are row-major with shape `[N_t, N_0, …, N_{n−1}]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub extents: Vec<f64>,
    pub counts: Vec<usize>,
    pub t_extent: f64,
    pub t_count: usize,
    /// Time of the first sample.
    #[serde(default)]
    pub t_origin: f64,
    /// Centre of the spatial box per axis; empty means the origin.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub x_center: Vec<f64>,
}

impl GridSpec {
    pub fn new(extents: Vec<f64>, counts: Vec<usize>, t_extent: f64, t_count: usize) -> Result<Self> {
        if extents.is_empty() || extents.len() != counts.len() {
            return Err(Error::Grid("need one extent per spatial axis".into()));
        }
        for &m in counts.iter().chain(std::iter::once(&t_count)) {
            if m < 4 || !m.is_power_of_two() {
                return Err(Error::Grid(format!("sample count {m} must be a power of two >= 4")));
            }
        }
        for &l in extents.iter().chain(std::iter::once(&t_extent)) {
            if !(l.is_finite() && l > 0.0) {
                return Err(Error::Grid(format!("extent {l} must be positive and finite")));
            }
        }
        Ok(Self { extents, counts, t_extent, t_count, t_origin: 0.0, x_center: Vec::new() })
    }

    /// Same extent and count on every spatial axis.
    pub fn cube(n: usize, extent: f64, count: usize, t_extent: f64, t_count: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Grid("spatial dimension must be positive".into()));
        }
        Self::new(vec![extent; n], vec![count; n], t_extent, t_count)
    }

    pub fn dim(&self) -> usize {
        self.counts.len()
    }

    pub fn dx(&self, axis: usize) -> f64 {
        self.extents[axis] / self.counts[axis] as f64
    }

    pub fn dt(&self) -> f64 {
        self.t_extent / self.t_count as f64
    }

    /// Volume element `Π Δx_a`.
    pub fn cell_volume(&self) -> f64 {
        (0..self.dim()).map(|a| self.dx(a)).product()
    }

    pub fn spatial_len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn sample_count(&self) -> usize {
        self.spatial_len() * self.t_count
    }

    pub fn x(&self, axis: usize, i: usize) -> f64 {
        self.center(axis) + (i as f64 - (self.counts[axis] / 2) as f64) * self.dx(axis)
    }

    pub fn center(&self, axis: usize) -> f64 {
        self.x_center.get(axis).copied().unwrap_or(0.0)
    }

    /// Same grid with the spatial box centred at `center`.
    pub fn with_x_center(mut self, center: Vec<f64>) -> Result<Self> {
        if center.len() != self.dim() || center.iter().any(|c| !c.is_finite()) {
            return Err(Error::Grid("need one finite centre per spatial axis".into()));
        }
        self.x_center = if center.iter().all(|&c| c == 0.0) { Vec::new() } else { center };
        Ok(self)
    }

    pub fn t(&self, j: usize) -> f64 {
        self.t_origin + j as f64 * self.dt()
    }

    /// Same grid with the first time sample at `t0`.
    pub fn with_t_origin(mut self, t0: f64) -> Self {
        self.t_origin = t0;
        self
    }

    /// Signed integer frequency index of sample `k` on a length-`m` axis.
    pub fn signed_index(k: usize, m: usize) -> i64 {
        if k < m / 2 {
            k as i64
        } else {
            k as i64 - m as i64
        }
    }

    pub fn xi(&self, axis: usize, k: usize) -> f64 {
        2.0 * PI * Self::signed_index(k, self.counts[axis]) as f64 / self.extents[axis]
    }

    pub fn tau(&self, j: usize) -> f64 {
        2.0 * PI * Self::signed_index(j, self.t_count) as f64 / self.t_extent
    }

    /// Spatial multi-index of the flat spatial offset `s`.
    pub fn unravel(&self, mut s: usize, out: &mut [usize]) {
        for a in (0..self.dim()).rev() {
            out[a] = s % self.counts[a];
            s /= self.counts[a];
        }
    }

    /// Spatial coordinates of every spatial sample, flattened row-major.
    pub fn coordinates(&self) -> Vec<Vec<f64>> {
        let mut idx = vec![0; self.dim()];
        (0..self.spatial_len())
            .map(|s| {
                self.unravel(s, &mut idx);
                idx.iter().enumerate().map(|(a, &i)| self.x(a, i)).collect()
            })
            .collect()
    }

    /// `|ξ|²` on the spatial frequency lattice, flattened row-major.
    pub fn xi_sq(&self) -> Vec<f64> {
        let mut idx = vec![0; self.dim()];
        (0..self.spatial_len())
            .map(|s| {
                self.unravel(s, &mut idx);
                idx.iter().enumerate().map(|(a, &k)| self.xi(a, k).powi(2)).sum()
            })
            .collect()
    }

    /// Grid with every spatial extent divided by `lambda` and the time extent
    /// by `lambda²`; sample counts are kept.
    pub fn rescaled(&self, lambda: f64) -> Result<Self> {
        Ok(Self::new(
            self.extents.iter().map(|l| l / lambda).collect(),
            self.counts.clone(),
            self.t_extent / (lambda * lambda),
            self.t_count,
        )?
        .with_t_origin(self.t_origin / (lambda * lambda))
        .with_x_center((0..self.dim()).map(|a| self.center(a) / lambda).collect())?)
    }

    pub fn shape(&self) -> Vec<usize> {
        std::iter::once(self.t_count).chain(self.counts.iter().copied()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_counts() {
        assert!(GridSpec::cube(1, 1.0, 6, 1.0, 8).is_err());
        assert!(GridSpec::cube(1, 1.0, 2, 1.0, 8).is_err());
        assert!(GridSpec::cube(1, -1.0, 8, 1.0, 8).is_err());
        assert!(GridSpec::new(vec![1.0], vec![8, 8], 1.0, 8).is_err());
    }

    #[test]
    fn symmetric_wavenumbers() {
        let g = GridSpec::cube(1, 2.0 * PI, 8, 1.0, 4).unwrap();
        let ks: Vec<f64> = (0..8).map(|k| g.xi(0, k)).collect();
        assert_eq!(ks, vec![0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0]);
        assert_eq!(g.x(0, 4), 0.0);
    }

    #[test]
    fn unravel_is_row_major() {
        let g = GridSpec::new(vec![1.0, 1.0], vec![4, 8], 1.0, 4).unwrap();
        let mut idx = [0; 2];
        g.unravel(8 + 3, &mut idx);
        assert_eq!(idx, [1, 3]);
    }
}
