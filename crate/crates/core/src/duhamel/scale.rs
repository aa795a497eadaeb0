use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dyadic number `δ = 2^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyadicScale {
    pub k: i32,
}

/// Exponents beyond this make `2^k` leave comfortable f64 range for the
/// multiplier arithmetic.
const K_LIMIT: i32 = 60;

impl DyadicScale {
    pub fn new(k: i32) -> Result<Self> {
        if k.abs() > K_LIMIT {
            return Err(Error::Scale(format!("dyadic exponent {k} outside ±{K_LIMIT}")));
        }
        Ok(Self { k })
    }

    /// Checks membership in the window `[k_min, k_max]`.
    pub fn within(k: i32, k_min: i32, k_max: i32) -> Result<Self> {
        if k < k_min || k > k_max {
            return Err(Error::Scale(format!("k = {k} outside the dyadic window [{k_min}, {k_max}]")));
        }
        Self::new(k)
    }

    /// Nearest power of two to `value`, which must be one exactly.
    pub fn from_value(value: f64) -> Result<Self> {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::Scale(format!("{value} is not a positive power of two")));
        }
        let k = value.log2().round() as i32;
        if 2f64.powi(k) != value {
            return Err(Error::Scale(format!("{value} is not a power of two")));
        }
        Self::new(k)
    }

    pub fn value(&self) -> f64 {
        2f64.powi(self.k)
    }
}

impl fmt::Display for DyadicScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}", self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_powers() {
        assert_eq!(DyadicScale::from_value(0.125).unwrap().k, -3);
        assert!(DyadicScale::from_value(0.3).is_err());
        assert!(DyadicScale::within(5, -4, 4).is_err());
        assert_eq!(DyadicScale::new(-2).unwrap().value(), 0.25);
    }
}
