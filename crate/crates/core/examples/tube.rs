//! Tube forcing travelling along x = −2t: |U F| stays of size 1/δ on the
//! output region while the quotient follows its predicted power of δ.

use strichartz_lab::counterexamples::*;
use strichartz_lab::duhamel::DyadicScale;
use strichartz_lab::geometry::*;

fn main() -> strichartz_lab::Result<()> {
    let r = Rational::new;
    let c = ExponentConfig::new(1, r(1, 4), r(1, 1), ExponentPoint::new(r(1, 1), r(0, 1))?)?;
    let p = predicted_exponents(Family::Tube, &c);
    println!("predicted quotient δ^{}", p.e_quotient);
    for k in [-1, -2, -3] {
        let params = TubeParams::new(DyadicScale::new(k)?, c)?;
        let t = tube_measure(&params)?;
        println!(
            "δ = {:<6} quotient {:.4}  δ·min|UF| {:.4}  phase bound {:.3}",
            t.delta,
            t.quotient,
            t.scaled_min,
            tube_phase_bound(&params, 2000, 1)
        );
    }
    Ok(())
}
