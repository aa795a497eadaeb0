use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectral::{Field, GridSpec};

/// Forcing for checking the dyadic synthesis against time stepping: a
/// Gaussian time envelope centred in the window times a few on-grid
/// space-time modes whose distance `|τ + |ξ|²|` to the paraboloid lies in
/// `omega_band`. Keeping that distance many envelope widths away from zero
/// makes the periodic multiplier solution coincide with the retarded one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeForcing {
    pub modes: usize,
    pub max_xi: f64,
    pub omega_band: (f64, f64),
    /// Envelope standard deviation in time units.
    pub sigma: f64,
    pub seed: u64,
}

impl Default for ModeForcing {
    fn default() -> Self {
        Self { modes: 6, max_xi: 1.2, omega_band: (0.27, 0.29), sigma: 40.0, seed: 7 }
    }
}

/// One selected on-grid mode `a·e^{i(ξx + τt)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub xi: f64,
    pub tau: f64,
    pub amplitude: Complex64,
}

impl ModeForcing {
    pub fn modes_on(&self, grid: &GridSpec) -> Result<Vec<Mode>> {
        if grid.dim() != 1 {
            return Err(Error::Grid("mode forcing is one-dimensional".into()));
        }
        let (lo, hi) = self.omega_band;
        if !(0.0 < lo && lo < hi) {
            return Err(Error::Config(format!("bad omega band ({lo}, {hi})")));
        }
        let dxi = 2.0 * std::f64::consts::PI / grid.extents[0];
        let dtau = 2.0 * std::f64::consts::PI / grid.t_extent;
        let kmax = (self.max_xi / dxi).floor() as i64;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::with_capacity(self.modes);
        let mut attempts = 0;
        while out.len() < self.modes {
            attempts += 1;
            if attempts > 10_000 {
                return Err(Error::Grid("could not place modes in the omega band".into()));
            }
            let k = rng.gen_range(-kmax..=kmax);
            let xi = k as f64 * dxi;
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let target = -xi * xi + sign * rng.gen_range(lo..hi);
            let tau = (target / dtau).round() * dtau;
            let omega = (tau + xi * xi).abs();
            let nyquist = std::f64::consts::PI / grid.dt();
            if omega < lo || omega > hi || tau.abs() > 0.8 * nyquist {
                continue;
            }
            let amplitude = Complex64::from_polar(rng.gen_range(0.5..1.0), rng.gen::<f64>() * std::f64::consts::TAU);
            out.push(Mode { xi, tau, amplitude });
        }
        Ok(out)
    }

    pub fn build(&self, grid: &GridSpec) -> Result<Field> {
        let modes = self.modes_on(grid)?;
        let tc = grid.t(0) + grid.t_extent / 2.0;
        let s2 = 2.0 * self.sigma * self.sigma;
        Ok(Field::from_fn(grid, |x, t| {
            let env = (-(t - tc).powi(2) / s2).exp();
            modes.iter().map(|m| m.amplitude * Complex64::from_polar(env, m.xi * x[0] + m.tau * t)).sum()
        }))
    }
}
