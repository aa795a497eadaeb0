use std::f64::consts::PI;

use num_complex::Complex64;

use super::scale::DyadicScale;
use crate::error::{Error, Result};
use crate::spectral::bump::phi;

/// `Γ(ν + 1)` for integer or half-integer `ν = half_twice / 2`.
fn gamma_nu_plus_one(twice_nu: u32) -> f64 {
    if twice_nu % 2 == 0 {
        (1..=twice_nu / 2).map(|i| i as f64).product()
    } else {
        // Γ(k + 3/2) = √π · Π_{i=0}^{k} (i + 1/2)
        let k = twice_nu / 2;
        PI.sqrt() * (0..=k).map(|i| i as f64 + 0.5).product::<f64>()
    }
}

/// `a^{−ν} J_ν(a)` for `ν = twice_nu / 2`, finite at `a = 0`.
pub fn bessel_scaled(twice_nu: u32, a: f64) -> f64 {
    let nu = twice_nu as f64 / 2.0;
    let a = a.abs();
    if a <= 12.0 {
        let q = -(a * a) / 4.0;
        let mut term = 2f64.powf(-nu) / gamma_nu_plus_one(twice_nu);
        let mut sum = term;
        for m in 1..200 {
            term *= q / (m as f64 * (m as f64 + nu));
            sum += term;
            if term.abs() < 1e-18 * sum.abs().max(1e-300) {
                break;
            }
        }
        return sum;
    }
    let j = if twice_nu % 2 == 0 {
        // J_m(a) = (1/2π) ∫_0^{2π} cos(mθ − a sin θ) dθ; the trapezoid rule is
        // exponentially accurate once the node count exceeds a + m.
        let m = (twice_nu / 2) as f64;
        let nodes = (a as usize + 64).next_power_of_two();
        let h = 2.0 * PI / nodes as f64;
        (0..nodes).map(|i| (m * i as f64 * h - a * (i as f64 * h).sin()).cos()).sum::<f64>() / nodes as f64
    } else {
        // upward recurrence from J_{−1/2}, J_{1/2}; stable for a > ν
        let c = (2.0 / (PI * a)).sqrt();
        let (mut jm, mut j) = (c * a.cos(), c * a.sin());
        let mut order = 0.5;
        while order < nu {
            let next = 2.0 * order / a * j - jm;
            jm = j;
            j = next;
            order += 1.0;
        }
        j
    };
    j * a.powf(-nu)
}

/// `∫_{S^{n−1}} e^{i a θ_1} dθ = (2π)^{n/2} a^{−(n−2)/2} J_{(n−2)/2}(a)`.
pub fn sphere_fourier(n: usize, a: f64) -> f64 {
    (2.0 * PI).powf(n as f64 / 2.0) * bessel_scaled(n as u32 - 2, a)
}

/// `K_δ(y, ·)` for one radius `|y|`, with the `r`-quadrature precomputed.
///
/// `K_δ(y, s) = δφ(δs) ∫ e^{−isr²} ψ(r) S(r|y|) dr` with `ψ = φ` and `S` the
/// Fourier transform of the sphere measure.
#[derive(Debug, Clone)]
pub struct RadialKernel {
    pub n: usize,
    pub radius: f64,
    pub delta: DyadicScale,
    r: Vec<f64>,
    weights: Vec<f64>,
}

impl RadialKernel {
    pub fn new(n: usize, radius: f64, delta: DyadicScale) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension { n: n as u32, reason: "the sphere reduction needs n >= 2" });
        }
        let d = delta.value();
        // ≥ 16 nodes per oscillation of e^{i(−sr² + r|y|)} for s ≤ 2/δ
        let slope = 4.0 * 2.0 / d + radius;
        let nodes = ((1.5 * slope / (2.0 * PI) * 32.0) as usize).max(2001);
        let h = 1.5 / (nodes - 1) as f64;
        let r: Vec<f64> = (0..nodes).map(|i| 0.5 + i as f64 * h).collect();
        let weights = r.iter().map(|&r| h * phi(r) * sphere_fourier(n, r * radius)).collect();
        Ok(Self { n, radius, delta, r, weights })
    }

    pub fn eval(&self, s: f64) -> Complex64 {
        let d = self.delta.value();
        let env = d * phi(d * s);
        if env == 0.0 {
            return Complex64::default();
        }
        let acc: Complex64 = self.r.iter().zip(&self.weights).map(|(&r, &w)| Complex64::from_polar(w, -s * r * r)).sum();
        acc * env
    }

    /// `max |K_δ|` over `samples` equispaced `s` in `[1/(2δ), 2/δ]`.
    pub fn max_abs(&self, samples: usize) -> f64 {
        let d = self.delta.value();
        let (a, b) = (0.5 / d, 2.0 / d);
        (0..samples)
            .map(|i| self.eval(a + (b - a) * i as f64 / (samples - 1).max(1) as f64).norm())
            .fold(0.0, f64::max)
    }
}

/// Pointwise `K_δ(y, s)`; depends on `y` only through `|y|`.
pub fn kernel_k_delta(y: &[f64], s: f64, delta: DyadicScale) -> Result<Complex64> {
    let radius = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    Ok(RadialKernel::new(y.len(), radius, delta)?.eval(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_reference_values() {
        // J0(1), J0(10), J1(10) from standard tables
        assert!((bessel_scaled(0, 1.0) - 0.765_197_686_557_966_6).abs() < 1e-13);
        assert!((bessel_scaled(0, 10.0) - -0.245_935_764_451_348_3).abs() < 1e-12);
        assert!((bessel_scaled(0, 30.0) - -0.086_367_983_581_040_23).abs() < 1e-12);
        assert!((bessel_scaled(2, 10.0) * 10.0 - 0.043_472_746_168_861_44).abs() < 1e-12);
        assert!((bessel_scaled(2, 20.0) * 20.0 - 0.066_833_124_175_850_04).abs() < 1e-12);
        for a in [0.5f64, 11.9, 12.1, 40.0] {
            let want = (2.0 / PI).sqrt() * a.sin() / a;
            assert!((bessel_scaled(1, a) - want).abs() < 1e-12, "a={a}");
        }
        assert!((bessel_scaled(2, 0.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn half_integer_recurrence_matches_series_at_switch() {
        for twice in [3, 5] {
            let lo = bessel_scaled(twice, 12.0);
            let hi = bessel_scaled(twice, 12.0 + 1e-9);
            assert!((lo - hi).abs() < 1e-10, "nu={}", twice as f64 / 2.0);
        }
    }

    #[test]
    fn support_in_s() {
        let d = DyadicScale::new(-3).unwrap();
        assert_eq!(kernel_k_delta(&[1.0, 2.0], 3.9, d).unwrap(), Complex64::default());
        assert_eq!(kernel_k_delta(&[1.0, 2.0], 16.0, d).unwrap(), Complex64::default());
        assert!(kernel_k_delta(&[1.0, 2.0], 8.0, d).unwrap().norm() > 0.0);
        assert!(kernel_k_delta(&[1.0], 8.0, d).is_err());
    }

    #[test]
    fn radial() {
        let d = DyadicScale::new(-2).unwrap();
        let a = kernel_k_delta(&[3.0, 4.0], 5.0, d).unwrap();
        let b = kernel_k_delta(&[0.0, -5.0], 5.0, d).unwrap();
        assert!((a - b).norm() < 1e-14);
    }
}
