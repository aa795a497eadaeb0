//! Mixed space-time norms L^r_x L^q_t, including the infinite exponents.

use num_complex::Complex64;
use strichartz_lab::spectral::{mixed_norm, Field, GridSpec, LebesgueExponent, MixedNormSpec};

fn main() -> strichartz_lab::Result<()> {
    let g = GridSpec::cube(1, 32.0, 256, 16.0, 128)?;
    // separable: e^{−x²/8} · e^{−(t−8)²/2}
    let f = Field::from_fn(&g, |x, t| Complex64::new((-(x[0] * x[0]) / 8.0).exp() * (-(t - 8.0).powi(2) / 2.0).exp(), 0.0));
    let exps = ["1", "2", "4", "inf"];
    print!("{:>6}", "r \\ q");
    for q in exps {
        print!("{q:>12}");
    }
    println!();
    for r in exps {
        print!("{r:>6}");
        for q in exps {
            let spec = MixedNormSpec::new(r.parse::<LebesgueExponent>()?, q.parse()?);
            print!("{:>12.6}", mixed_norm(&f, spec)?);
        }
        println!();
    }
    Ok(())
}
