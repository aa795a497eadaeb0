//! The dyadic bump φ, its Fourier transform, and the temporal and spatial
//! Littlewood–Paley projections built from it.

use num_complex::Complex64;
use strichartz_lab::spectral::{build_bump, spatial_annulus_projection, temporal_projection, Field, GridSpec};

fn main() -> strichartz_lab::Result<()> {
    let bump = build_bump();
    for t in [0.25, 0.6, 1.0, 1.37, 1.9, 3.0] {
        let sum: f64 = (-10..=10).map(|k| bump.phi(2f64.powi(k) * t)).sum();
        println!("φ({t}) = {:.6}   Σ_k φ(2^k·{t}) − 1 = {:+.1e}", bump.phi(t), sum - 1.0);
    }
    for eta in [0.0, 1.0, 8.0, 32.0, 128.0] {
        println!("|φ̂({eta})| = {:.3e}", bump.phi_hat(eta).norm());
    }

    // a field with three temporal frequencies, split into dyadic pieces
    let g = GridSpec::cube(1, 4.0, 8, 16.0 * std::f64::consts::PI, 512)?;
    let taus = [g.tau(8), g.tau(20), g.tau(64)];
    let f = Field::from_fn(&g, |_, t| taus.iter().map(|&tau| Complex64::from_polar(1.0, tau * t)).sum());
    for j in -4..=1 {
        println!("‖P_{j} F‖ = {:.4}", temporal_projection(&f, j)?.l2_norm());
    }
    let wave = Field::from_fn(&g, |x, _| Complex64::from_polar(1.0, g.xi(0, 1) * x[0]));
    println!("|ξ| = {:.3}: ‖annulus_0‖ / ‖F‖ = {:.4}", g.xi(0, 1), spatial_annulus_projection(&wave, 0)?.l2_norm() / wave.l2_norm());
    Ok(())
}
