use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::norms;
use super::smooth::smooth_indicator;
use crate::duhamel::{duhamel_timestep, DyadicScale, LowerLimit, TimestepOptions};
use crate::error::{Error, Result};
use crate::geometry::ExponentConfig;
use crate::spectral::{Field, GridSpec};

/// The traveling tube
/// `F(y, s) = Φ(δ^{1/2}(y₁ + 2s), δ^{1/2}ȳ, δs) e^{−i(y₁+s)}` with every
/// `χ_{[0,1]}` factor of `Φ` replaced by a smooth indicator with edges of
/// width `w` (in the argument of `Φ`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TubeParams {
    pub n: u32,
    pub delta: DyadicScale,
    pub grid: GridSpec,
    pub config: ExponentConfig,
    /// Output window `c1/δ ≤ t ≤ c2/δ`.
    pub c1: f64,
    pub c2: f64,
    pub w: f64,
    pub substeps: usize,
}

pub const DEFAULT_WINDOW: (f64, f64) = (4.0, 8.0);
pub const DEFAULT_EDGE: f64 = 0.25;

impl TubeParams {
    /// Defaults: `c1 = 4`, `c2 = 8`, `w = 1/4`, grid from [`tube_grid`].
    pub fn new(delta: DyadicScale, config: ExponentConfig) -> Result<Self> {
        Self::with_constants(delta, config, DEFAULT_WINDOW, DEFAULT_EDGE)
    }

    pub fn with_constants(delta: DyadicScale, config: ExponentConfig, window: (f64, f64), w: f64) -> Result<Self> {
        let grid = tube_grid(config.n, delta, window.1, w)?;
        let p = Self { n: config.n, delta, grid, config, c1: window.0, c2: window.1, w, substeps: 1 };
        p.validate()?;
        Ok(p)
    }

    pub fn with_grid(mut self, grid: GridSpec) -> Result<Self> {
        self.grid = grid;
        self.validate()?;
        Ok(self)
    }

    fn scales(&self) -> (f64, f64) {
        let d = self.delta.value();
        (d, d.sqrt())
    }

    pub fn validate(&self) -> Result<()> {
        let (d, sd) = self.scales();
        if self.delta.k >= 0 {
            return Err(Error::Config(format!("δ = {} must be at most 1/2", self.delta)));
        }
        if self.n != self.config.n || self.grid.dim() != self.n as usize {
            return Err(Error::Dimension { n: self.n, reason: "grid, config and family dimensions differ" });
        }
        if !(0.0 < self.c1 && self.c1 < self.c2) {
            return Err(Error::Config("window constants need 0 < c1 < c2".into()));
        }
        if !(self.w > 0.0 && self.w <= 0.5) {
            return Err(Error::Config(format!("edge width {} outside (0, 1/2]", self.w)));
        }
        let g = &self.grid;
        let (lo, hi) = (g.x(0, 0), g.x(0, g.counts[0] - 1));
        let reach = (self.c2 / d) * 2.0;
        if lo > -reach - 1.0 / sd || hi < 1.0 / sd {
            return Err(Error::Grid(format!("first axis [{lo}, {hi}] does not cover the tube and the output region")));
        }
        for a in 1..g.dim() {
            if g.x(a, 0) > -1.0 / sd || g.x(a, g.counts[a] - 1) < 1.0 / sd {
                return Err(Error::Grid("transverse axes do not cover |x̄| ≤ δ^(-1/2)".into()));
            }
        }
        if g.t_origin > 0.0 || g.t(g.t_count - 1) < self.c2 / d {
            return Err(Error::Grid("time grid must cover [0, c2/δ]".into()));
        }
        let edge = self.w / sd;
        if (0..g.dim()).any(|a| g.dx(a) > edge / 2.0) || g.dt() > edge / 4.0 {
            return Err(Error::Grid(format!("grid too coarse for edges of physical width {edge:.3}")));
        }
        Ok(())
    }
}

/// Room, in units of `δ^{−1/2}`, kept on both sides of the drifting tube so
/// that its dispersive spreading does not reach the box edges.
pub const DEFAULT_ROOM: f64 = 160.0;

/// Default grid for the tube. With edge width `e = w δ^{−1/2}` in `y`:
/// `Δx ≤ min(e/4, 1/4)`, `Δt ≤ min(e/8, 1/8)`, time `[0, (c2 + 1)/δ]`. The
/// first axis spans the drift `[−2(c2 + 1)/δ, 0]` plus
/// [`DEFAULT_ROOM`]`·δ^{−1/2}` on either side; transverse axes have length
/// `16 δ^{−1/2}` about the origin. Sample counts are powers of two.
pub fn tube_grid(n: u32, delta: DyadicScale, c2: f64, w: f64) -> Result<GridSpec> {
    if n == 0 {
        return Err(Error::Dimension { n, reason: "dimension must be positive" });
    }
    let d = delta.value();
    let e = w / d.sqrt();
    let dx = (e / 4.0).min(0.25);
    let dt = (e / 8.0).min(0.125);
    let count = |len: f64, h: f64| ((len / h).ceil() as usize).next_power_of_two().max(4);
    let t = (c2 + 1.0) / d;
    let l1 = 2.0 * t + 2.0 * DEFAULT_ROOM / d.sqrt();
    let lt = 16.0 / d.sqrt();
    let mut extents = vec![l1];
    let mut counts = vec![count(l1, dx)];
    let mut center = vec![-t];
    for _ in 1..n {
        extents.push(lt);
        counts.push(count(lt, dx));
        center.push(0.0);
    }
    GridSpec::new(extents, counts, t, count(t, dt))?.with_x_center(center)
}

/// The mollified tube on the physical side.
pub fn tube_field(p: &TubeParams) -> Result<Field> {
    p.validate()?;
    let (d, sd) = p.scales();
    let w = p.w;
    Ok(Field::from_fn(&p.grid, move |y, s| {
        let mut a = smooth_indicator(d * s, w);
        if a == 0.0 {
            return Complex64::default();
        }
        a *= smooth_indicator(sd * (y[0] + 2.0 * s), w);
        for v in &y[1..] {
            a *= smooth_indicator(sd * v, w);
        }
        Complex64::from_polar(a, -(y[0] + s))
    }))
}

fn in_region(x: &[f64], t: f64, p: &TubeParams) -> bool {
    let (d, sd) = p.scales();
    let transverse: f64 = x[1..].iter().map(|v| v * v).sum::<f64>().sqrt();
    t >= p.c1 / d && t <= p.c2 / d && (x[0] + 2.0 * t).powi(2) <= 1.0 / d && transverse <= 1.0 / sd
}

/// `{(x₁+2t)² ≤ δ^{−1}, |x̄| ≤ δ^{−1/2}, c1/δ ≤ t ≤ c2/δ}` on the grid.
pub fn tube_region_mask(p: &TubeParams) -> Vec<bool> {
    let g = &p.grid;
    let coords = g.coordinates();
    let mut mask = Vec::with_capacity(g.sample_count());
    for j in 0..g.t_count {
        let t = g.t(j);
        mask.extend(coords.iter().map(|x| in_region(x, t, p)));
    }
    mask
}

/// Largest sampled `|P(x, y, t, s)|`,
/// `P = (|x̄ − ȳ|² + (x₁ − y₁ + 2t)²) / (4(t − s))`, over `x, t` in the output
/// region and `δ^{1/2}y ∈ [0,1]^n`, `δs ∈ [0,1]`. Region corners are always
/// included; the rest are `samples` seeded random draws.
pub fn tube_phase_bound(p: &TubeParams, samples: usize, seed: u64) -> f64 {
    let (d, sd) = p.scales();
    let n = p.n as usize;
    let phase = |x: &[f64], t: f64, y: &[f64], s: f64| {
        let bar: f64 = x[1..].iter().zip(&y[1..]).map(|(a, b)| (a - b).powi(2)).sum();
        (bar + (x[0] - y[0] + 2.0 * t).powi(2)) / (4.0 * (t - s))
    };
    let mut worst = 0.0f64;
    // corners: extreme offsets, earliest window time, latest source time
    for &t in &[p.c1 / d, p.c2 / d] {
        for &off in &[-1.0 / sd, 1.0 / sd] {
            for &y1 in &[0.0, 1.0 / sd] {
                let mut x = vec![off - 2.0 * t];
                let mut y = vec![y1];
                for _ in 1..n {
                    x.push(-1.0 / sd);
                    y.push(1.0 / sd);
                }
                worst = worst.max(phase(&x, t, &y, 1.0 / d).abs());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let t = rng.gen_range(p.c1..=p.c2) / d;
        let mut x = vec![rng.gen_range(-1.0..=1.0) / sd - 2.0 * t];
        let y0: f64 = rng.gen_range(0.0..=1.0) / sd;
        let mut y = vec![y0];
        for _ in 1..n {
            // uniform direction inside the transverse ball, radius ≤ δ^{-1/2}
            let v: f64 = rng.gen_range(-1.0..=1.0);
            x.push(v / (sd * ((n - 1) as f64).sqrt()));
            y.push(rng.gen_range(0.0..=1.0) / sd);
        }
        let s = rng.gen_range(0.0..=1.0) / d;
        worst = worst.max(phase(&x, t, &y, s).abs());
    }
    worst
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TubeMeasurement {
    pub delta: f64,
    pub input_norm: f64,
    /// `‖U F‖_{L^r_x L^q_t}` over the output region.
    pub output_norm: f64,
    pub quotient: f64,
    /// `min |U F|` over the output region.
    pub min_abs: f64,
    /// `δ · min |U F|`; bounded below uniformly when `|U F| ≳ δ^{−1}`.
    pub scaled_min: f64,
    pub edge_mass: f64,
}

/// Builds the tube, runs the Duhamel integral from `t = 0` and measures.
pub fn tube_measure(p: &TubeParams) -> Result<TubeMeasurement> {
    let f = tube_field(p)?;
    let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, p.substeps))?.field;
    let mask = tube_region_mask(p);
    let (input_norm, output_norm) = norms(&f, &u, &p.config, Some(&mask))?;
    let min_abs = u.samples().iter().zip(&mask).filter(|(_, &m)| m).map(|(v, _)| v.norm()).fold(f64::INFINITY, f64::min);
    let d = p.delta.value();
    Ok(TubeMeasurement {
        delta: d,
        input_norm,
        output_norm,
        quotient: output_norm / input_norm,
        min_abs,
        scaled_min: d * min_abs,
        edge_mass: u.edge_mass_fraction(1.0 / 16.0)?,
    })
}
