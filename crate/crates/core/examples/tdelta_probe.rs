//! Growth of ‖T_δ F‖_{L^r L^2} / ‖F‖_{L^r̃ L^2} as δ → 0 for an
//! annulus-supported random-phase field (coarse grid; the acceptance run
//! uses 128²×256).

use strichartz_lab::duhamel::*;
use strichartz_lab::geometry::Rational;
use strichartz_lab::spectral::GridSpec;

fn main() -> strichartz_lab::Result<()> {
    let (inv_rt, inv_r) = (Rational::new(1, 2), Rational::new(1, 6));
    check_probe_pair(2, inv_rt, inv_r)?;
    let g = GridSpec::new(vec![48.0, 48.0], vec![64, 64], 76.8, 128)?;
    let f = annulus_random_field(&g, 11, (-5.0, 1.0));
    let deltas: Vec<DyadicScale> = (-5..=-2).rev().map(DyadicScale::new).collect::<Result<_, _>>()?;
    let res = tdelta_scaling_probe(inv_rt, inv_r, &deltas, &f)?;
    for p in &res.points {
        println!("δ = {:<8} quotient {:.4e}", p.delta, p.quotient);
    }
    println!("slope {:.3} ± {:.3} (predicted {:.3})", res.slope, res.stderr, res.predicted);
    Ok(())
}
