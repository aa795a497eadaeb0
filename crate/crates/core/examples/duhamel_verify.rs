//! The retarded Duhamel integral two ways: exact-propagator time stepping
//! and the dyadic sum Σ_k 2^{−k} T_{2^k}, plus the time-side T_δ oracle.

use strichartz_lab::duhamel::*;
use strichartz_lab::spectral::GridSpec;

fn main() -> strichartz_lab::Result<()> {
    let g = GridSpec::cube(1, 128.0, 512, 560.0, 512)?;
    let f = ModeForcing::default().build(&g)?;
    let oracle = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::GridStart, 16))?;
    for (lo, hi) in [(-2, 2), (-4, 4), (-6, 6), (-8, 8)] {
        let s = dyadic_synthesis(&f, lo, hi)?;
        println!("k ∈ [{lo:>2}, {hi}]: relative L² gap {:.3e}", s.field.relative_l2_error(&oracle.field)?);
    }
    for k in [-8, -6, -5] {
        let delta = DyadicScale::new(k)?;
        let e = t_delta_timeside(&f, delta)?.relative_l2_error(&t_delta_apply(&f, delta)?)?;
        println!("δ = 2^{k}: multiplier vs time-side {e:.2e}");
    }
    Ok(())
}
