//! Parabolic rescaling F(λx, λ²t): the Duhamel quotient changes by
//! λ^{2·gap}, so only scale-invariant exponents can give a bounded estimate.

use num_complex::Complex64;
use strichartz_lab::counterexamples::scaling_measure;
use strichartz_lab::duhamel::{LowerLimit, TimestepOptions};
use strichartz_lab::geometry::*;
use strichartz_lab::spectral::{Field, GridSpec};

fn main() -> strichartz_lab::Result<()> {
    let g = GridSpec::cube(1, 64.0, 128, 64.0, 128)?;
    let f = Field::from_fn(&g, |x, t| Complex64::from_polar((-(x[0] / 4.0).powi(2) - ((t - 20.0) / 4.0).powi(2)).exp(), 0.5 * x[0]));
    let r = Rational::new;
    for (q, qt) in [("0", "1/2"), ("0", "3/4"), ("0", "1")] {
        let c = ExponentConfig::new(1, parse_rational(q)?, parse_rational(qt)?, ExponentPoint::new(r(1, 1), r(0, 1))?)?;
        let m = scaling_measure(&f, &c, &[2.0, 4.0], TimestepOptions::new(LowerLimit::Zero, 2))?;
        for s in m {
            println!("gap {:>4}  λ = {}: log2 ratio {:.4} (expected {})", scaling_gap(&c), s.lambda, s.log2_ratio, 2.0 * s.lambda.log2() * to_f64(scaling_gap(&c)));
        }
    }
    Ok(())
}

fn to_f64(v: Rational) -> f64 {
    *v.numer() as f64 / *v.denom() as f64
}
