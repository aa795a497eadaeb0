//! The radial kernel K_δ(y, s) in two dimensions: its size near the origin
//! against |y| = 1/δ, for shrinking δ.

use strichartz_lab::duhamel::{kernel_k_delta, DyadicScale, RadialKernel};

fn main() -> strichartz_lab::Result<()> {
    for k in -7..=-4 {
        let delta = DyadicScale::new(k)?;
        let d = delta.value();
        let far = RadialKernel::new(2, 1.0 / d, delta)?.max_abs(801);
        let near = RadialKernel::new(2, 1.0 / (200.0 * d), delta)?.max_abs(801);
        println!("δ = 1/{:<4} max|K| at |y| = 1/δ: {far:.3e}, at 1/(200δ): {near:.3e}, ratio {:.1}", 1 << -k, far / near);
    }
    let delta = DyadicScale::new(-4)?;
    println!("K(y=(3,4), s=20) = {:.4e}", kernel_k_delta(&[3.0, 4.0], 20.0, delta)?);
    println!("K(y=(5,0), s=20) = {:.4e}", kernel_k_delta(&[5.0, 0.0], 20.0, delta)?);
    Ok(())
}
