use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scale::DyadicScale;
use super::tdelta::t_delta_apply;
use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::harness::fit_slope;
use crate::spectral::bump::phi;
use crate::spectral::{mixed_norm, Field, GridSpec, LebesgueExponent, MixedNormSpec, Side};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbePoint {
    pub k: i32,
    pub delta: f64,
    pub output_norm: f64,
    pub input_norm: f64,
    pub quotient: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub points: Vec<ProbePoint>,
    pub slope: f64,
    pub stderr: f64,
    /// `−(n−1)/2 + n/r̃`
    pub predicted: f64,
}

/// Random-phase field with `|F̂(ξ, τ)| = φ(|ξ|)` for `τ` in `tau_band` and
/// zero otherwise; phases drawn from a seeded ChaCha stream in storage order.
pub fn annulus_random_field(grid: &GridSpec, seed: u64, tau_band: (f64, f64)) -> Field {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ns = grid.spatial_len();
    let phases: Vec<f64> = (0..grid.sample_count()).map(|_| rng.gen::<f64>() * std::f64::consts::TAU).collect();
    let mut hat = Field::from_spectrum(grid, |xi, tau| {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        let a = if tau >= tau_band.0 && tau <= tau_band.1 { phi(r) } else { 0.0 };
        Complex64::new(a, 0.0)
    });
    hat.samples_mut().par_chunks_mut(ns).zip(phases.par_chunks(ns)).for_each(|(s, p)| {
        for (v, &a) in s.iter_mut().zip(p) {
            *v *= Complex64::from_polar(1.0, a);
        }
    });
    hat.to_physical()
}

/// Rejects pairs outside the range of the bound behind the probe,
/// `(n+1)/r ≤ (n−1)(1 − 1/r̃)`, and dimensions below 2.
pub fn check_probe_pair(n: usize, inv_rt: Rational, inv_r: Rational) -> Result<()> {
    if n < 2 {
        return Err(Error::Dimension { n: n as u32, reason: "the annulus probe needs n >= 2" });
    }
    let n = n as i64;
    let one = Rational::from_integer(1);
    if Rational::from_integer(n + 1) * inv_r > Rational::from_integer(n - 1) * (one - inv_rt) {
        return Err(Error::Exponent(format!("(n+1)/r <= (n-1)(1-1/r~) fails for 1/r~ = {inv_rt}, 1/r = {inv_r}")));
    }
    Ok(())
}

/// `−(n−1)/2 + n/r̃`
pub fn probe_predicted_slope(n: usize, inv_rt: Rational) -> f64 {
    -((n - 1) as f64) / 2.0 + n as f64 * (*inv_rt.numer() as f64 / *inv_rt.denom() as f64)
}

/// `‖F‖_{L^{r̃}_x L²_t}`
pub fn probe_input_norm(f: &Field, inv_rt: Rational) -> Result<f64> {
    mixed_norm(f, MixedNormSpec::new(LebesgueExponent::from_reciprocal(inv_rt)?, LebesgueExponent::Finite(2.0)))
}

/// One probe measurement at `δ`, given the input norm.
pub fn probe_point(f: &Field, inv_r: Rational, input_norm: f64, delta: DyadicScale) -> Result<ProbePoint> {
    let out_spec = MixedNormSpec::new(LebesgueExponent::from_reciprocal(inv_r)?, LebesgueExponent::Finite(2.0));
    let output_norm = mixed_norm(&t_delta_apply(f, delta)?, out_spec)?;
    Ok(ProbePoint { k: delta.k, delta: delta.value(), output_norm, input_norm, quotient: output_norm / input_norm })
}

/// Measures `‖T_δF‖_{L^r_x L²_t} / ‖F‖_{L^{r̃}_x L²_t}` for every `δ` and fits
/// the slope in `log₂ δ`. See [`check_probe_pair`] for the admissible pairs.
pub fn tdelta_scaling_probe(inv_rt: Rational, inv_r: Rational, deltas: &[DyadicScale], f: &Field) -> Result<ProbeResult> {
    f.require_side(Side::Physical)?;
    let n = f.grid().dim();
    check_probe_pair(n, inv_rt, inv_r)?;
    let input_norm = probe_input_norm(f, inv_rt)?;
    let points = deltas.iter().map(|&d| probe_point(f, inv_r, input_norm, d)).collect::<Result<Vec<_>>>()?;
    let fit = fit_slope(&points.iter().map(|p| (p.delta, p.quotient)).collect::<Vec<_>>())?;
    Ok(ProbeResult { points, slope: fit.slope, stderr: fit.stderr, predicted: probe_predicted_slope(n, inv_rt) })
}
