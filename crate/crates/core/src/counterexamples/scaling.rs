use serde::{Deserialize, Serialize};

use super::norms;
use crate::duhamel::{duhamel_timestep, DyadicScale, TimestepOptions};
use crate::error::{Error, Result};
use crate::geometry::ExponentConfig;
use crate::spectral::{Field, Side};

/// `F_λ(x, t) = F(λx, λ²t)` for a power of two `λ`: the samples are reused
/// verbatim on the grid with spatial extents (and centre) divided by `λ` and
/// time extent (and origin) divided by `λ²`, which is exact.
pub fn scaling_family(f: &Field, lambda: f64) -> Result<Field> {
    DyadicScale::from_value(lambda).map_err(|_| Error::Scale(format!("λ = {lambda} is not a power of two")))?;
    f.require_side(Side::Physical)?;
    let grid = f.grid().rescaled(lambda)?;
    f.clone().with_grid(&grid)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingMeasurement {
    pub lambda: f64,
    pub input_norm: f64,
    pub output_norm: f64,
    pub quotient: f64,
    /// Quotient divided by the quotient at `λ = 1`.
    pub ratio: f64,
    pub log2_ratio: f64,
}

fn quotient(f: &Field, c: &ExponentConfig, opts: TimestepOptions) -> Result<(f64, f64)> {
    let u = duhamel_timestep(f, opts)?.field;
    norms(f, &u, c, None)
}

/// Duhamel quotients of `F_λ` for each `λ`, relative to `F` itself.
pub fn scaling_measure(f: &Field, c: &ExponentConfig, lambdas: &[f64], opts: TimestepOptions) -> Result<Vec<ScalingMeasurement>> {
    let (i0, o0) = quotient(f, c, opts)?;
    let q0 = o0 / i0;
    lambdas
        .iter()
        .map(|&lambda| {
            let (input_norm, output_norm) = quotient(&scaling_family(f, lambda)?, c, opts)?;
            let quotient = output_norm / input_norm;
            Ok(ScalingMeasurement { lambda, input_norm, output_norm, quotient, ratio: quotient / q0, log2_ratio: (quotient / q0).log2() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duhamel::ModeForcing;
    use crate::geometry::{scaling_gap, ExponentPoint, Rational};
    use crate::spectral::GridSpec;

    fn forcing() -> Field {
        let g = GridSpec::cube(1, 64.0, 128, 64.0, 128).unwrap();
        ModeForcing { modes: 3, max_xi: 1.0, omega_band: (0.3, 0.5), sigma: 4.0, seed: 1 }.build(&g).unwrap()
    }

    #[test]
    fn identity_and_rejection() {
        let f = forcing();
        assert_eq!(scaling_family(&f, 1.0).unwrap(), f);
        assert!(scaling_family(&f, 3.0).is_err());
        assert!(scaling_family(&f, 0.5).is_ok());
    }

    #[test]
    fn ratio_is_power_of_gap() {
        let f = forcing();
        let c = ExponentConfig::new(1, Rational::new(0, 1), Rational::new(3, 4), ExponentPoint::from_ratios((1, 1), (0, 1)).unwrap())
            .unwrap();
        let g = scaling_gap(&c);
        assert_eq!(g, Rational::new(1, 4));
        let m = scaling_measure(&f, &c, &[2.0, 4.0], TimestepOptions::default()).unwrap();
        assert!((m[0].log2_ratio - 0.5).abs() < 1e-9);
        assert!((m[1].log2_ratio - 1.0).abs() < 1e-9);
    }
}
