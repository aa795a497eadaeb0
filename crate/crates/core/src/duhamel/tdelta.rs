use num_complex::Complex64;
use rayon::prelude::*;

use super::lines::{from_xi_lines, to_xi_lines};
use super::result::{DuhamelResult, Method, Truncation};
use super::scale::DyadicScale;
use crate::error::{Error, Result};
use crate::spectral::bump::phi;
use crate::spectral::{BumpPhi, Field, Side};

/// `T_δ F` via its space-time multiplier `φ̂((τ + |ξ|²)/δ)`.
pub fn t_delta_apply(f: &Field, delta: DyadicScale) -> Result<Field> {
    t_delta_apply_with(f, delta, BumpPhi::shared())
}

pub fn t_delta_apply_with(f: &Field, delta: DyadicScale, bump: &BumpPhi) -> Result<Field> {
    f.require_side(Side::Physical)?;
    let d = delta.value();
    let mut hat = f.clone().to_frequency();
    hat.apply_multiplier(|xi, tau| {
        let k2: f64 = xi.iter().map(|v| v * v).sum();
        bump.phi_hat((tau + k2) / d)
    })?;
    Ok(hat.to_physical())
}

/// `T_δ F = ∫ δφ(δ(t − s)) e^{i(t−s)Δ} F(s) ds` by direct periodic
/// convolution over the time samples, one spatial frequency at a time.
/// Independent of the tabulated `φ̂`; used to cross-check [`t_delta_apply`].
pub fn t_delta_timeside(f: &Field, delta: DyadicScale) -> Result<Field> {
    f.require_side(Side::Physical)?;
    let grid = f.grid();
    let d = delta.value();
    let (dt, nt) = (grid.dt(), grid.t_count);
    if 2.0 / d > grid.t_extent {
        return Err(Error::Scale(format!(
            "kernel window (1/(2δ), 2/δ) with δ = {delta} exceeds the time extent {}",
            grid.t_extent
        )));
    }
    let lags: Vec<(usize, f64)> = (1..nt)
        .filter_map(|m| {
            let w = dt * d * phi(d * m as f64 * dt);
            (w != 0.0).then_some((m, w))
        })
        .collect();
    if lags.is_empty() {
        log::warn!("T_delta kernel at delta = {delta} has no quadrature node (2/delta < dt = {dt}); returning zero");
        return Ok(Field::zeros(grid));
    }
    let xi_sq = grid.xi_sq();
    let input = to_xi_lines(f);
    let mut out = vec![Complex64::default(); input.len()];
    out.par_chunks_mut(nt).zip(input.par_chunks(nt)).zip(xi_sq.par_iter()).for_each(|((o, line), &w)| {
        let kernel: Vec<(usize, Complex64)> =
            lags.iter().map(|&(m, a)| (m, Complex64::from_polar(a, -(m as f64) * dt * w))).collect();
        for (j, v) in o.iter_mut().enumerate() {
            let mut acc = Complex64::default();
            for &(m, k) in &kernel {
                acc += k * line[(j + nt - m) % nt];
            }
            *v = acc;
        }
    });
    Ok(from_xi_lines(grid, &out))
}

/// `Σ_{k=k_min}^{k_max} 2^{−k} T_{2^k} F`, the dyadically truncated retarded
/// Duhamel operator. The multipliers are summed per frequency in increasing
/// `k`, so the result does not depend on the thread count.
pub fn dyadic_synthesis(f: &Field, k_min: i32, k_max: i32) -> Result<DuhamelResult> {
    dyadic_synthesis_with(f, k_min, k_max, BumpPhi::shared())
}

pub fn dyadic_synthesis_with(f: &Field, k_min: i32, k_max: i32, bump: &BumpPhi) -> Result<DuhamelResult> {
    f.require_side(Side::Physical)?;
    if k_min > k_max {
        return Err(Error::Scale(format!("empty dyadic window [{k_min}, {k_max}]")));
    }
    let scales: Vec<(f64, f64)> = (k_min..=k_max)
        .map(|k| DyadicScale::new(k).map(|s| (s.value(), 1.0 / s.value())))
        .collect::<Result<_>>()?;
    let mut hat = f.clone().to_frequency();
    hat.apply_multiplier(|xi, tau| {
        let w = tau + xi.iter().map(|v| v * v).sum::<f64>();
        scales.iter().fold(Complex64::default(), |acc, &(d, inv)| acc + bump.phi_hat(w / d) * inv)
    })?;
    Ok(DuhamelResult {
        field: hat.to_physical(),
        method: Method::DyadicSynthesis,
        truncation: Truncation { dyadic_window: Some((k_min, k_max)), quadrature_order: 0, ..Default::default() },
    })
}

/// The time-side oracle wrapped with its metadata.
pub fn t_delta_oracle(f: &Field, delta: DyadicScale) -> Result<DuhamelResult> {
    Ok(DuhamelResult {
        field: t_delta_timeside(f, delta)?,
        method: Method::TimeSideOracle,
        truncation: Truncation { delta: Some(delta), quadrature_order: 2, ..Default::default() },
    })
}
