//! Content-addressed caching of constructed fields: the second request for
//! the same parameters reads the stored binary instead of rebuilding.

use std::time::Instant;

use strichartz_lab::counterexamples::{cache, knapp_field, KnappParams};
use strichartz_lab::geometry::*;

fn main() -> strichartz_lab::Result<()> {
    let r = Rational::new;
    let c = ExponentConfig::new(1, r(1, 4), r(1, 2), ExponentPoint::new(r(1, 1), r(1, 6))?)?;
    let params = KnappParams::new(32, c)?;
    let dir = std::env::temp_dir().join("strichartz-cache-example");
    println!("key {}", cache::cache_key("knapp", &params)?);
    for attempt in 0..2 {
        let t = Instant::now();
        let f = cache::load_or_build(&dir, "knapp", &params, || knapp_field(&params))?;
        println!("attempt {attempt}: ‖F‖₂ = {:.6} in {:.1?}", f.l2_norm(), t.elapsed());
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
