use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::field::{Field, Side};
use crate::error::{Error, Result};
use crate::geometry::Rational;

/// A Lebesgue exponent in `[1, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ExponentRepr", into = "ExponentRepr")]
pub enum LebesgueExponent {
    Finite(f64),
    Infinity,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ExponentRepr {
    Number(f64),
    Text(String),
}

impl TryFrom<ExponentRepr> for LebesgueExponent {
    type Error = Error;

    fn try_from(r: ExponentRepr) -> Result<Self> {
        match r {
            ExponentRepr::Number(p) => LebesgueExponent::finite(p),
            ExponentRepr::Text(s) => s.parse(),
        }
    }
}

impl From<LebesgueExponent> for ExponentRepr {
    fn from(e: LebesgueExponent) -> Self {
        match e {
            LebesgueExponent::Finite(p) => ExponentRepr::Number(p),
            LebesgueExponent::Infinity => ExponentRepr::Text("inf".into()),
        }
    }
}

impl LebesgueExponent {
    pub fn finite(p: f64) -> Result<Self> {
        if p.is_infinite() && p > 0.0 {
            return Ok(LebesgueExponent::Infinity);
        }
        if !(p >= 1.0) {
            return Err(Error::Exponent(format!("Lebesgue exponent {p} is below 1")));
        }
        Ok(LebesgueExponent::Finite(p))
    }

    /// From the reciprocal `1/p ∈ [0, 1]`; zero gives `∞`.
    pub fn from_reciprocal(inv: Rational) -> Result<Self> {
        if inv == Rational::from_integer(0) {
            return Ok(LebesgueExponent::Infinity);
        }
        let v = *inv.numer() as f64 / *inv.denom() as f64;
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Exponent(format!("reciprocal {inv} is outside [0, 1]")));
        }
        Self::finite(1.0 / v)
    }
}

impl FromStr for LebesgueExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(LebesgueExponent::Infinity);
        }
        let p: f64 = s.parse().map_err(|_| Error::Exponent(format!("cannot parse exponent {s:?}")))?;
        Self::finite(p)
    }
}

impl fmt::Display for LebesgueExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LebesgueExponent::Finite(p) => write!(f, "{p}"),
            LebesgueExponent::Infinity => f.write_str("inf"),
        }
    }
}

/// `L^r_x L^q_t`: time integrated first (inner), space outer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedNormSpec {
    pub r: LebesgueExponent,
    pub q: LebesgueExponent,
}

impl MixedNormSpec {
    pub fn new(r: LebesgueExponent, q: LebesgueExponent) -> Self {
        Self { r, q }
    }

    pub fn from_reciprocals(inv_r: Rational, inv_q: Rational) -> Result<Self> {
        Ok(Self { r: LebesgueExponent::from_reciprocal(inv_r)?, q: LebesgueExponent::from_reciprocal(inv_q)? })
    }
}

/// `‖(a_i)‖_{ℓ^p(w)}` for nonnegative `a_i` with uniform weight `w`.
fn lp(values: impl Iterator<Item = f64>, p: LebesgueExponent, w: f64) -> f64 {
    match p {
        LebesgueExponent::Infinity => values.fold(0.0, f64::max),
        LebesgueExponent::Finite(p) => {
            // scale by the max to keep large exponents finite
            let vals: Vec<f64> = values.collect();
            let m = vals.iter().copied().fold(0.0, f64::max);
            if m == 0.0 {
                return 0.0;
            }
            let s: f64 = vals.iter().map(|&v| (v / m).powf(p)).sum();
            m * (s * w).powf(1.0 / p)
        }
    }
}

/// `(Σ_x (Σ_t |f|^q Δt)^{r/q} Δx)^{1/r}` with maxima for infinite exponents.
pub fn mixed_norm(f: &Field, spec: MixedNormSpec) -> Result<f64> {
    mixed_norm_masked(f, spec, None)
}

/// As [`mixed_norm`], with samples outside `mask` treated as zero.
pub fn mixed_norm_masked(f: &Field, spec: MixedNormSpec, mask: Option<&[bool]>) -> Result<f64> {
    f.require_side(Side::Physical)?;
    let g = f.grid();
    if let Some(m) = mask {
        if m.len() != g.sample_count() {
            return Err(Error::Grid("mask size does not match the grid".into()));
        }
    }
    let ns = g.spatial_len();
    let nt = g.t_count;
    let data = f.samples();
    let dt = g.dt();
    let pick = |i: usize| -> f64 {
        match mask {
            Some(m) if !m[i] => 0.0,
            _ => data[i].norm(),
        }
    };
    let inner: Vec<f64> = (0..ns)
        .into_par_iter()
        .map(|s| lp((0..nt).map(|j| pick(j * ns + s)), spec.q, dt))
        .collect();
    Ok(lp(inner.into_iter(), spec.r, g.cell_volume()))
}

/// Discrete `L^p(dx)` norm of a spatial slice.
pub fn slice_lp(f: &[Complex64], p: LebesgueExponent, cell: f64) -> f64 {
    lp(f.iter().map(|v| v.norm()), p, cell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::GridSpec;

    fn spec(r: f64, q: f64) -> MixedNormSpec {
        MixedNormSpec::new(LebesgueExponent::finite(r).unwrap(), LebesgueExponent::finite(q).unwrap())
    }

    #[test]
    fn constant_on_unit_measure() {
        let g = GridSpec::cube(2, 1.0, 8, 1.0, 8).unwrap();
        let f = Field::from_fn(&g, |_, _| Complex64::new(0.0, -2.5));
        for s in [spec(1.0, 3.0), spec(4.0, 1.5), MixedNormSpec::new(LebesgueExponent::Infinity, LebesgueExponent::Infinity)] {
            assert!((mixed_norm(&f, s).unwrap() - 2.5).abs() < 1e-12);
        }
    }

    #[test]
    fn separable_product() {
        let g = GridSpec::cube(1, 3.0, 16, 2.0, 8).unwrap();
        let fx = |x: f64| (x * 0.7).cos() + 1.5;
        let gt = |t: f64| (t * 1.9).sin() - 0.2;
        let f = Field::from_fn(&g, |x, t| Complex64::new(fx(x[0]) * gt(t), 0.0));
        let r = LebesgueExponent::finite(3.0).unwrap();
        let q = LebesgueExponent::Infinity;
        let xs: Vec<Complex64> = (0..16).map(|i| Complex64::new(fx(g.x(0, i)), 0.0)).collect();
        let ts: Vec<Complex64> = (0..8).map(|j| Complex64::new(gt(g.t(j)), 0.0)).collect();
        let want = slice_lp(&xs, r, g.dx(0)) * slice_lp(&ts, q, g.dt());
        assert!((mixed_norm(&f, MixedNormSpec::new(r, q)).unwrap() - want).abs() < 1e-12 * want);
    }

    #[test]
    fn rejects_small_exponents() {
        assert!(LebesgueExponent::finite(0.5).is_err());
        assert_eq!("inf".parse::<LebesgueExponent>().unwrap(), LebesgueExponent::Infinity);
        assert_eq!(LebesgueExponent::from_reciprocal(Rational::new(1, 4)).unwrap(), LebesgueExponent::Finite(4.0));
    }

    #[test]
    fn exponent_json() {
        let s = MixedNormSpec::new(LebesgueExponent::Finite(6.0), LebesgueExponent::Infinity);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"r":6.0,"q":"inf"}"#);
        assert_eq!(serde_json::from_str::<MixedNormSpec>(&j).unwrap(), s);
    }
}
