//! Knapp-type forcing: norms of F and of its Duhamel output as M grows, for
//! a configuration that violates the Knapp condition.

use strichartz_lab::counterexamples::*;
use strichartz_lab::geometry::*;

fn main() -> strichartz_lab::Result<()> {
    let r = Rational::new;
    let c = ExponentConfig::new(1, r(1, 4), r(1, 2), ExponentPoint::new(r(1, 1), r(1, 3))?)?;
    let p = predicted_exponents(Family::Knapp, &c);
    println!("predicted: output M^{}, input M^{}, quotient M^{}", p.e_lhs, p.e_rhs, p.e_quotient);
    for m in [16, 32, 64] {
        let k = knapp_measure(&KnappParams::new(m, c)?)?;
        println!("M = {m:>3}: ‖F‖ {:.4}  ‖UF‖ {:.4}  quotient {:.4}", k.input_norm, k.output_norm, k.quotient);
    }
    Ok(())
}
