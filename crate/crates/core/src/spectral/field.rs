use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fft::{fft_all, Direction};
use super::grid::GridSpec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Physical,
    Frequency,
}

/// Complex samples on a [`GridSpec`], time-slowest row-major layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: GridSpec,
    data: Vec<Complex64>,
    side: Side,
}

impl Field {
    pub fn zeros(grid: &GridSpec) -> Self {
        Self { grid: grid.clone(), data: vec![Complex64::default(); grid.sample_count()], side: Side::Physical }
    }

    pub fn from_samples(grid: &GridSpec, data: Vec<Complex64>, side: Side) -> Result<Self> {
        if data.len() != grid.sample_count() {
            return Err(Error::Grid(format!("{} samples for a grid of {}", data.len(), grid.sample_count())));
        }
        Ok(Self { grid: grid.clone(), data, side })
    }

    /// Samples `f(x, t)` on the physical side.
    pub fn from_fn<F>(grid: &GridSpec, f: F) -> Self
    where
        F: Fn(&[f64], f64) -> Complex64 + Sync,
    {
        let coords = grid.coordinates();
        let ns = grid.spatial_len();
        let mut data = vec![Complex64::default(); grid.sample_count()];
        data.par_chunks_mut(ns).enumerate().for_each(|(j, slice)| {
            let t = grid.t(j);
            for (v, x) in slice.iter_mut().zip(&coords) {
                *v = f(x, t);
            }
        });
        Self { grid: grid.clone(), data, side: Side::Physical }
    }

    /// Samples `g(ξ, τ)` directly on the frequency lattice.
    pub fn from_spectrum<F>(grid: &GridSpec, g: F) -> Self
    where
        F: Fn(&[f64], f64) -> Complex64 + Sync,
    {
        let ns = grid.spatial_len();
        let mut data = vec![Complex64::default(); grid.sample_count()];
        data.par_chunks_mut(ns).enumerate().for_each(|(j, slice)| {
            let tau = grid.tau(j);
            let mut idx = vec![0; grid.dim()];
            let mut xi = vec![0.0; grid.dim()];
            for (s, v) in slice.iter_mut().enumerate() {
                grid.unravel(s, &mut idx);
                for a in 0..grid.dim() {
                    xi[a] = grid.xi(a, idx[a]);
                }
                *v = g(&xi, tau);
            }
        });
        Self { grid: grid.clone(), data, side: Side::Frequency }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.data
    }

    pub fn samples_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.data
    }

    /// Spatial slice at time index `j`.
    pub fn slice(&self, j: usize) -> &[Complex64] {
        let ns = self.grid.spatial_len();
        &self.data[j * ns..(j + 1) * ns]
    }

    pub fn slice_mut(&mut self, j: usize) -> &mut [Complex64] {
        let ns = self.grid.spatial_len();
        &mut self.data[j * ns..(j + 1) * ns]
    }

    pub fn require_side(&self, side: Side) -> Result<()> {
        if self.side != side {
            return Err(Error::Grid(format!("expected a {side:?}-side field, got {:?}", self.side)));
        }
        Ok(())
    }

    /// Space-time forward transform (no-op if already frequency-side).
    pub fn to_frequency(mut self) -> Self {
        if self.side == Side::Physical {
            fft_all(&mut self.data, &self.grid.shape(), Direction::Forward);
            self.side = Side::Frequency;
        }
        self
    }

    pub fn to_physical(mut self) -> Self {
        if self.side == Side::Frequency {
            fft_all(&mut self.data, &self.grid.shape(), Direction::Inverse);
            self.side = Side::Physical;
        }
        self
    }

    /// Discrete `L²(dx dt)` norm; on the frequency side Plancherel is applied.
    pub fn l2_norm(&self) -> f64 {
        let s: f64 = self.data.iter().map(|v| v.norm_sqr()).sum();
        let w = self.grid.cell_volume() * self.grid.dt();
        match self.side {
            Side::Physical => (s * w).sqrt(),
            Side::Frequency => (s * w / self.grid.sample_count() as f64).sqrt(),
        }
    }

    /// Multiplies every frequency-side sample by `m(ξ, τ)` (the field must
    /// be frequency-side).
    pub fn apply_multiplier<F>(&mut self, m: F) -> Result<()>
    where
        F: Fn(&[f64], f64) -> Complex64 + Sync,
    {
        self.require_side(Side::Frequency)?;
        let grid = &self.grid;
        let ns = grid.spatial_len();
        self.data.par_chunks_mut(ns).enumerate().for_each(|(j, slice)| {
            let tau = grid.tau(j);
            let mut idx = vec![0; grid.dim()];
            let mut xi = vec![0.0; grid.dim()];
            for (s, v) in slice.iter_mut().enumerate() {
                grid.unravel(s, &mut idx);
                for a in 0..grid.dim() {
                    xi[a] = grid.xi(a, idx[a]);
                }
                *v *= m(&xi, tau);
            }
        });
        Ok(())
    }

    /// Relative `L²` distance `‖self − other‖ / ‖other‖`.
    pub fn relative_l2_error(&self, other: &Field) -> Result<f64> {
        if self.grid != other.grid || self.side != other.side {
            return Err(Error::Grid("fields live on different grids or sides".into()));
        }
        let num: f64 = self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm_sqr()).sum();
        let den: f64 = other.data.iter().map(|b| b.norm_sqr()).sum();
        Ok(if den == 0.0 { num.sqrt() } else { (num / den).sqrt() })
    }

    pub fn scale(&mut self, c: Complex64) {
        self.data.par_iter_mut().for_each(|v| *v *= c);
    }

    pub fn axpy(&mut self, a: Complex64, other: &Field) -> Result<()> {
        if self.grid != other.grid || self.side != other.side {
            return Err(Error::Grid("fields live on different grids or sides".into()));
        }
        self.data.par_iter_mut().zip(&other.data).for_each(|(y, x)| *y += a * x);
        Ok(())
    }

    /// Fraction of the total space-time `L²` mass lying in the outer `margin`
    /// fraction of the box along any axis. Measures how much of a periodic
    /// evolution reaches the boundary, i.e. could wrap around.
    pub fn edge_mass_fraction(&self, margin: f64) -> Result<f64> {
        self.require_side(Side::Physical)?;
        let g = &self.grid;
        let band: Vec<usize> = g.counts.iter().map(|&m| ((m as f64 * margin).ceil() as usize).max(1)).collect();
        let ns = g.spatial_len();
        let mut idx = vec![0; g.dim()];
        let edge: Vec<bool> = (0..ns)
            .map(|s| {
                g.unravel(s, &mut idx);
                idx.iter().zip(&g.counts).zip(&band).any(|((&i, &m), &b)| i < b || i >= m - b)
            })
            .collect();
        let (e, t) = self
            .data
            .par_chunks(ns)
            .map(|slice| {
                slice.iter().zip(&edge).fold((0.0, 0.0), |(e, t), (v, &on)| {
                    let w = v.norm_sqr();
                    (if on { e + w } else { e }, t + w)
                })
            })
            .collect::<Vec<(f64, f64)>>()
            .into_iter()
            .fold((0.0, 0.0), |(a, b), (c, d)| (a + c, b + d));
        Ok(if t > 0.0 { e / t } else { 0.0 })
    }

    /// Rebinds the samples to another grid with identical sample counts.
    pub fn with_grid(self, grid: &GridSpec) -> Result<Self> {
        if grid.counts != self.grid.counts || grid.t_count != self.grid.t_count {
            return Err(Error::Grid("sample counts differ".into()));
        }
        Ok(Self { grid: grid.clone(), data: self.data, side: self.side })
    }
}
