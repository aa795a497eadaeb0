//! Free Schrödinger evolution of a Gaussian on a periodic grid, compared
//! with the closed form.

use num_complex::Complex64;
use strichartz_lab::spectral::{free_propagate, slice_l2, GridSpec};

fn gaussian(x: f64, t: f64, s: f64) -> Complex64 {
    let st = Complex64::new(s, 2.0 * t);
    (Complex64::new(s, 0.0) / st).sqrt() * (-(x * x) / (2.0 * st)).exp()
}

fn main() -> strichartz_lab::Result<()> {
    let g = GridSpec::cube(1, 256.0, 1024, 1.0, 4)?;
    let s = 16.0;
    let u0: Vec<Complex64> = (0..1024).map(|i| gaussian(g.x(0, i), 0.0, s)).collect();
    println!("{:>6} {:>12} {:>12} {:>12}", "t", "L2", "max|u|", "rel err");
    for t in [0.0, 1.0, 5.0, 10.0, 25.0, 50.0] {
        let u = free_propagate(&g, &u0, t);
        let err: f64 = u.iter().enumerate().map(|(i, v)| (v - gaussian(g.x(0, i), t, s)).norm_sqr()).sum::<f64>().sqrt()
            / u.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        let peak = u.iter().map(|v| v.norm()).fold(0.0, f64::max);
        println!("{t:>6} {:>12.9} {peak:>12.6} {err:>12.2e}", slice_l2(&g, &u));
    }
    Ok(())
}
