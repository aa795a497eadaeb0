use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::norms;
use crate::duhamel::{duhamel_timestep, LowerLimit, TimestepOptions};
use crate::error::{Error, Result};
use crate::geometry::ExponentConfig;
use crate::spectral::bump::phi;
use crate::spectral::fft::{fft_axes, Direction};
use crate::spectral::{Field, GridSpec};

/// The Knapp cap `F̂(ξ, τ) = φ(|ξ|) ψ(M^{1/2}(τ + 1))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnappParams {
    pub n: u32,
    /// Large parameter, a power of two `≥ 8`.
    pub m: u32,
    pub grid: GridSpec,
    pub config: ExponentConfig,
    /// Output region `window.0·M ≤ t ≤ window.1·M`.
    pub window: (f64, f64),
    /// Output region `|2t − |x|| ≤ c_x·M^{1/2}`.
    pub c_x: f64,
    /// Trapezoid substeps for the Duhamel integral.
    pub substeps: usize,
}

impl KnappParams {
    /// Defaults: grid from [`knapp_grid`], window `[M/4, M/2]`, `c_x = 1/2`.
    pub fn new(m: u32, config: ExponentConfig) -> Result<Self> {
        let p = Self { n: config.n, m, grid: knapp_grid(config.n, m)?, config, window: (0.25, 0.5), c_x: 0.5, substeps: 2 };
        p.validate()?;
        Ok(p)
    }

    pub fn with_grid(mut self, grid: GridSpec) -> Result<Self> {
        self.grid = grid;
        self.validate()?;
        Ok(self)
    }

    fn sqrt_m(&self) -> f64 {
        (self.m as f64).sqrt()
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 8 || !self.m.is_power_of_two() {
            return Err(Error::Config(format!("M = {} must be a power of two ≥ 8", self.m)));
        }
        if self.n != self.config.n || self.grid.dim() != self.n as usize {
            return Err(Error::Dimension { n: self.n, reason: "grid, config and family dimensions differ" });
        }
        let g = &self.grid;
        let m = self.m as f64;
        if 2.0 * PI / g.t_extent > 0.5 / self.sqrt_m() {
            return Err(Error::Grid(format!(
                "τ spacing {:.4} cannot resolve the width M^(-1/2) = {:.4}",
                2.0 * PI / g.t_extent,
                1.0 / self.sqrt_m()
            )));
        }
        if (0..g.dim()).any(|a| PI / g.dx(a) <= 2.0) || PI / g.dt() <= 4.0 {
            return Err(Error::Grid("grid cannot resolve the annulus |ξ| < 2 or the paraboloid above it".into()));
        }
        let t_end = g.t(g.t_count - 1);
        if g.t_origin > 0.0 || t_end < self.window.1 * m || t_end < self.sqrt_m() {
            return Err(Error::Grid("time grid must cover [0, max(M^(1/2), window end)]".into()));
        }
        if !(0.0 < self.window.0 && self.window.0 < self.window.1) || self.c_x <= 0.0 {
            return Err(Error::Config("output region constants must be positive and ordered".into()));
        }
        Ok(())
    }
}

/// Default grid: `Δx = 1`, `Δt = 1/8`, `T = 2^⌈log₂ max(M, 4π M^{1/2})⌉` (so the
/// τ spacing is at most half the cap width), time from `−T/8`, and a box of
/// side `8T` centred at the origin, wide enough that nothing travelling at
/// speed `≤ 4` wraps around within the simulated time.
pub fn knapp_grid(n: u32, m: u32) -> Result<GridSpec> {
    if n == 0 {
        return Err(Error::Dimension { n, reason: "dimension must be positive" });
    }
    let mf = m as f64;
    let t = 2f64.powi(mf.max(4.0 * PI * mf.sqrt()).log2().ceil() as i32);
    let l = 8.0 * t;
    Ok(GridSpec::cube(n as usize, l, l as usize, t, (8.0 * t) as usize)?.with_t_origin(-t / 8.0))
}

fn bump_mass() -> f64 {
    static MASS: OnceLock<f64> = OnceLock::new();
    *MASS.get_or_init(|| {
        let k = 1 << 14;
        let h = 1.0 / k as f64;
        let f = |s: f64| raw_bump(s);
        (0..=k)
            .map(|i| {
                let w = if i == 0 || i == k { 1.0 } else if i % 2 == 1 { 4.0 } else { 2.0 };
                w * f(i as f64 * h)
            })
            .sum::<f64>()
            * h
            / 3.0
    })
}

fn raw_bump(s: f64) -> f64 {
    if s <= 0.0 || s >= 1.0 {
        0.0
    } else {
        (-1.0 / s - 1.0 / (1.0 - s)).exp()
    }
}

/// `(2π)^{−1}∫ ψ(M^{1/2}(τ+1)) e^{itτ} dτ = e^{−it} M^{−1/2} b(t M^{−1/2})`
/// where `b ≥ 0` is a smooth bump on `[0, 1]` with unit mass, so `ψ = b̂`
/// has `ψ(0) = max|ψ| = 1`.
pub fn knapp_time_profile(t: f64, m: u32) -> Complex64 {
    let sm = (m as f64).sqrt();
    Complex64::from_polar(raw_bump(t / sm) / (bump_mass() * sm), -t)
}

/// `(2π)^{−n}∫ φ(|ξ|) e^{ix·ξ} dξ` sampled on the spatial grid (lattice sum).
fn annulus_profile(grid: &GridSpec) -> Vec<Complex64> {
    let n = grid.dim();
    let mut idx = vec![0; n];
    let x0: Vec<f64> = (0..n).map(|a| grid.x(a, 0)).collect();
    let mut spec: Vec<Complex64> = (0..grid.spatial_len())
        .map(|s| {
            grid.unravel(s, &mut idx);
            let xi: Vec<f64> = (0..n).map(|a| grid.xi(a, idx[a])).collect();
            let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
            let phase: f64 = xi.iter().zip(&x0).map(|(k, x)| k * x).sum();
            Complex64::from_polar(phi(r), phase)
        })
        .collect();
    let axes: Vec<usize> = (0..n).collect();
    fft_axes(&mut spec, &grid.counts, &axes, Direction::Inverse);
    let w = 1.0 / grid.cell_volume();
    spec.iter_mut().for_each(|v| *v *= w);
    spec
}

/// The Knapp field on the physical side; separable as
/// `F(x, t) = φ̌(x) · e^{−it} M^{−1/2} b(t M^{−1/2})`, temporally supported
/// in `[0, M^{1/2}]`.
pub fn knapp_field(p: &KnappParams) -> Result<Field> {
    p.validate()?;
    let g = &p.grid;
    let space = annulus_profile(g);
    let ns = g.spatial_len();
    let mut data = Vec::with_capacity(g.sample_count());
    for j in 0..g.t_count {
        let c = knapp_time_profile(g.t(j), p.m);
        data.extend(space.iter().map(|v| v * c));
    }
    debug_assert_eq!(data.len(), ns * g.t_count);
    Field::from_samples(g, data, crate::spectral::Side::Physical)
}

/// `{window.0·M ≤ t ≤ window.1·M, |2t − |x|| ≤ c_x M^{1/2}}` on the grid.
pub fn knapp_region_mask(p: &KnappParams) -> Vec<bool> {
    let g = &p.grid;
    let m = p.m as f64;
    let band = p.c_x * m.sqrt();
    let coords = g.coordinates();
    let mut mask = Vec::with_capacity(g.sample_count());
    for j in 0..g.t_count {
        let t = g.t(j);
        let in_t = t >= p.window.0 * m && t <= p.window.1 * m;
        mask.extend(coords.iter().map(|x| in_t && (2.0 * t - x.iter().map(|v| v * v).sum::<f64>().sqrt()).abs() <= band));
    }
    mask
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KnappMeasurement {
    pub m: u32,
    /// `‖F‖_{L^{r̃′}_x L^{q̃′}_t}`
    pub input_norm: f64,
    /// `‖U F‖_{L^r_x L^q_t}` over the output region.
    pub output_norm: f64,
    pub quotient: f64,
    /// `M^{1/2}·min |U F|` over the output region.
    pub scaled_min: f64,
    /// Worst edge-mass fraction of `U F` (wrap-around diagnostic).
    pub edge_mass: f64,
}

/// Builds the field, runs the Duhamel integral from `t = 0` and measures both
/// sides of the estimate.
pub fn knapp_measure(p: &KnappParams) -> Result<KnappMeasurement> {
    let f = knapp_field(p)?;
    let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, p.substeps))?.field;
    let mask = knapp_region_mask(p);
    let (input_norm, output_norm) = norms(&f, &u, &p.config, Some(&mask))?;
    let min = u.samples().iter().zip(&mask).filter(|(_, &m)| m).map(|(v, _)| v.norm()).fold(f64::INFINITY, f64::min);
    Ok(KnappMeasurement {
        m: p.m,
        input_norm,
        output_norm,
        quotient: output_norm / input_norm,
        scaled_min: min * (p.m as f64).sqrt(),
        edge_mass: u.edge_mass_fraction(1.0 / 16.0)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ExponentPoint, Rational};

    fn config(n: u32) -> ExponentConfig {
        ExponentConfig::new(n, Rational::new(1, 4), Rational::new(1, 2), ExponentPoint::from_ratios((1, 1), (1, 6)).unwrap())
            .unwrap()
    }

    #[test]
    fn time_profile_support_and_mass() {
        let m = 64;
        let h = 1e-3;
        let mass: f64 = (0..8000).map(|i| knapp_time_profile(i as f64 * h, m).norm() * h).sum();
        assert!((mass - 1.0).abs() < 1e-6);
        assert_eq!(knapp_time_profile(-1e-9, m).norm(), 0.0);
        assert_eq!(knapp_time_profile(8.0 + 1e-9, m).norm(), 0.0);
    }

    #[test]
    fn frequency_support() {
        let p = KnappParams::new(16, config(1)).unwrap();
        let f = knapp_field(&p).unwrap();
        let g = f.grid().clone();
        let hat = f.to_frequency();
        let ns = g.spatial_len();
        let total: f64 = hat.samples().iter().map(|v| v.norm_sqr()).sum();
        let mut outside = 0.0;
        for (i, v) in hat.samples().iter().enumerate() {
            let xi = g.xi(0, i % ns).abs();
            if xi <= 0.5 || xi >= 2.0 {
                outside += v.norm_sqr();
            }
        }
        assert!(outside / total < 1e-24);
        // mass beyond |τ + 1| > c·M^{-1/2} decays faster than any power of c
        let beyond = |c: f64| -> f64 {
            let o: f64 = hat
                .samples()
                .iter()
                .enumerate()
                .filter(|(i, _)| (g.tau(i / ns) + 1.0).abs() > c / 4.0)
                .map(|(_, v)| v.norm_sqr())
                .sum();
            o / total
        };
        let (a, b) = (beyond(16.0), beyond(32.0));
        assert!(b < 1e-5 && b < a * 1e-2);
    }

    #[test]
    fn rejects_unresolved_cap() {
        let p = KnappParams::new(64, config(1)).unwrap();
        let coarse = GridSpec::cube(1, p.grid.extents[0], p.grid.counts[0], 64.0, 512).unwrap().with_t_origin(-8.0);
        assert!(p.with_grid(coarse).is_err());
    }

    #[test]
    fn transpose_invariant_in_2d() {
        let c = config(2);
        let g = GridSpec::cube(2, 48.0, 32, 64.0, 256).unwrap().with_t_origin(-8.0);
        let mut p = KnappParams::new(8, c).unwrap_or_else(|_| unreachable!());
        p.window = (0.25, 0.5);
        let p = p.with_grid(g).unwrap();
        let u = duhamel_timestep(&knapp_field(&p).unwrap(), TimestepOptions::new(LowerLimit::Zero, 1)).unwrap().field;
        let g = u.grid();
        let (nx, ns) = (g.counts[0], g.spatial_len());
        let d = u.samples();
        let mut worst = 0.0f64;
        for j in 0..g.t_count {
            for a in 0..nx {
                for b in 0..nx {
                    worst = worst.max((d[j * ns + a * nx + b] - d[j * ns + b * nx + a]).norm());
                }
            }
        }
        assert!(worst < 1e-12);
    }
}
