use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::fft::{fft_all, Direction};
use crate::error::{Error, Result};

/// Tabulation parameters for `φ̂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BumpConfig {
    /// Table covers `|η| ≤ range`; `φ̂` is taken as zero beyond.
    pub range: f64,
    /// Samples across `[−range, range]`.
    pub samples: usize,
}

impl Default for BumpConfig {
    fn default() -> Self {
        Self { range: 256.0, samples: 1 << 16 }
    }
}

fn glue(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else {
        (-1.0 / s).exp()
    }
}

/// Smooth monotone cut-off: `1` on `(−∞, 1]`, `0` on `[2, ∞)`.
pub fn eta(t: f64) -> f64 {
    if t <= 1.0 {
        1.0
    } else if t >= 2.0 {
        0.0
    } else {
        let a = glue(2.0 - t);
        a / (a + glue(t - 1.0))
    }
}

/// Dyadic bump `φ(t) = η(t) − η(2t)`, supported in `(1/2, 2)`.
pub fn phi(t: f64) -> f64 {
    if t <= 0.5 || t >= 2.0 {
        0.0
    } else {
        eta(t) - eta(2.0 * t)
    }
}

/// `φ` together with a cubic-interpolated table of
/// `φ̂(η) = ∫ φ(t) e^{−itη} dt`.
#[derive(Debug, Clone)]
pub struct BumpPhi {
    config: BumpConfig,
    step: f64,
    /// `φ̂(m·step)` for `m = 0..=samples/2` (plus guard points).
    table: Vec<Complex64>,
}

impl BumpPhi {
    pub fn new(config: BumpConfig) -> Result<Self> {
        if !(config.range > 0.0) || config.samples < 16 || !config.samples.is_power_of_two() {
            return Err(Error::Grid(format!("invalid bump tabulation {config:?}")));
        }
        let half = config.samples / 2;
        let step = config.range / half as f64;
        // Riemann sum on t_k = 1/2 + kΔ with Δ·step = 2π/N turns the table into
        // one FFT; Δ ≤ 1e-3 keeps aliasing far beyond the table range.
        let mut nfft = (2.0 * std::f64::consts::PI / (step * 1e-3)).ceil() as usize;
        nfft = nfft.max(2 * half + 8).next_power_of_two();
        let dt = 2.0 * std::f64::consts::PI / (nfft as f64 * step);
        let t0 = 0.5;
        let nodes = ((1.5 / dt).ceil() as usize + 1).min(nfft);
        let mut buf = vec![Complex64::default(); nfft];
        for (k, v) in buf.iter_mut().take(nodes).enumerate() {
            *v = Complex64::new(phi(t0 + k as f64 * dt), 0.0);
        }
        fft_all(&mut buf, &[nfft], Direction::Forward);
        let table = (0..half + 3)
            .map(|m| {
                let e = m as f64 * step;
                buf[m] * dt * Complex64::from_polar(1.0, -t0 * e)
            })
            .collect();
        Ok(Self { config, step, table })
    }

    /// Process-wide instance with the default tabulation.
    pub fn shared() -> &'static BumpPhi {
        static SHARED: OnceLock<BumpPhi> = OnceLock::new();
        SHARED.get_or_init(build_bump)
    }

    pub fn config(&self) -> BumpConfig {
        self.config
    }

    pub fn phi(&self, t: f64) -> f64 {
        phi(t)
    }

    pub fn eta(&self, t: f64) -> f64 {
        eta(t)
    }

    /// Interpolated `φ̂(η)`; exact conjugate symmetry `φ̂(−η) = conj φ̂(η)`.
    pub fn phi_hat(&self, e: f64) -> Complex64 {
        let a = e.abs();
        if a > self.config.range {
            return Complex64::default();
        }
        let s = a / self.step;
        let i = (s.floor() as usize).min(self.table.len() - 3);
        let f = s - i as f64;
        let at = |k: isize| -> Complex64 {
            let idx = i as isize + k;
            if idx < 0 {
                // φ̂(−h) = conj φ̂(h)
                self.table[(-idx) as usize].conj()
            } else {
                self.table[idx as usize]
            }
        };
        // four-point Lagrange through nodes −1, 0, 1, 2
        let (p0, p1, p2, p3) = (at(-1), at(0), at(1), at(2));
        let w0 = -f * (f - 1.0) * (f - 2.0) / 6.0;
        let w1 = (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0;
        let w2 = -(f + 1.0) * f * (f - 2.0) / 2.0;
        let w3 = (f + 1.0) * f * (f - 1.0) / 6.0;
        let v = p0 * w0 + p1 * w1 + p2 * w2 + p3 * w3;
        if e < 0.0 {
            v.conj()
        } else {
            v
        }
    }

    /// `sup |φ̂| = φ̂(0) = ∫ φ` (φ ≥ 0).
    pub fn sup_hat(&self) -> f64 {
        self.table[0].re
    }
}

/// Default `φ` with `φ̂` tabulated on `|η| ≤ 256` with `2^16` samples.
pub fn build_bump() -> BumpPhi {
    BumpPhi::new(BumpConfig::default()).expect("default tabulation is valid")
}
