use num_complex::Complex64;

use super::bump::phi;
use super::field::{Field, Side};
use crate::error::Result;

/// `P_j F`: multiplies `F̂(ξ, τ)` by `φ(2^j τ)`.
pub fn temporal_projection(f: &Field, j: i32) -> Result<Field> {
    f.require_side(Side::Physical)?;
    let s = 2f64.powi(j);
    let mut hat = f.clone().to_frequency();
    hat.apply_multiplier(|_, tau| Complex64::new(phi(s * tau), 0.0))?;
    Ok(hat.to_physical())
}

/// Multiplies the spatial transform by `φ(2^j |ξ|)` at every time.
pub fn spatial_annulus_projection(f: &Field, j: i32) -> Result<Field> {
    f.require_side(Side::Physical)?;
    let s = 2f64.powi(j);
    let mut hat = f.clone().to_frequency();
    hat.apply_multiplier(|xi, _| {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        Complex64::new(phi(s * r), 0.0)
    })?;
    Ok(hat.to_physical())
}
