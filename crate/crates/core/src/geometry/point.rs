use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = Ratio<i64>;

pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

pub(crate) fn in_unit(v: Rational) -> bool {
    v >= Rational::zero() && v <= Rational::one()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Exponent(format!("cannot parse {s:?} as a rational"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(p, q))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A point `(1/r̃′, 1/r)` of the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentPoint {
    /// `1/r̃′`
    pub x: Rational,
    /// `1/r`
    pub y: Rational,
}

impl ExponentPoint {
    pub fn new(x: Rational, y: Rational) -> Result<Self> {
        if !in_unit(x) || !in_unit(y) {
            return Err(Error::Exponent(format!("point ({x}, {y}) is outside the unit square")));
        }
        Ok(Self { x, y })
    }

    /// Unchecked constructor for points known to lie in the square.
    pub(crate) const fn raw(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ratios(x: (i64, i64), y: (i64, i64)) -> Result<Self> {
        Self::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let half = rat(1, 2);
        Self::raw((self.x + other.x) * half, (self.y + other.y) * half)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(self.x), to_f64(self.y))
    }
}

pub(crate) fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The duality involution `(a, b) ↦ (1 − b, 1 − a)`.
pub fn dual_point(p: ExponentPoint) -> ExponentPoint {
    ExponentPoint::raw(Rational::one() - p.y, Rational::one() - p.x)
}

/// Dimension plus the four exponent reciprocals of an inhomogeneous estimate.
///
/// Only `1/q`, `1/q̃′` and the point `(1/r̃′, 1/r)` are stored; the unprimed
/// dual reciprocals are derived on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentConfig {
    pub n: u32,
    pub inv_q: Rational,
    pub inv_qt_prime: Rational,
    pub point: ExponentPoint,
}

impl ExponentConfig {
    pub fn new(n: u32, inv_q: Rational, inv_qt_prime: Rational, point: ExponentPoint) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension { n, reason: "dimension must be positive" });
        }
        if !in_unit(inv_q) || !in_unit(inv_qt_prime) {
            return Err(Error::Exponent(format!(
                "time reciprocals 1/q = {inv_q}, 1/q~' = {inv_qt_prime} must lie in [0, 1]"
            )));
        }
        if !in_unit(point.x) || !in_unit(point.y) {
            return Err(Error::Exponent("point outside the unit square".into()));
        }
        Ok(Self { n, inv_q, inv_qt_prime, point })
    }

    /// `1/r`
    pub fn inv_r(&self) -> Rational {
        self.point.y
    }

    /// `1/r̃′`
    pub fn inv_rt_prime(&self) -> Rational {
        self.point.x
    }

    /// `1/r̃ = 1 − 1/r̃′`
    pub fn inv_rt(&self) -> Rational {
        Rational::one() - self.point.x
    }

    /// `1/q̃ = 1 − 1/q̃′`
    pub fn inv_qt(&self) -> Rational {
        Rational::one() - self.inv_qt_prime
    }

    /// The configuration of the adjoint estimate.
    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            inv_q: Rational::one() - self.inv_qt_prime,
            inv_qt_prime: Rational::one() - self.inv_q,
            point: dual_point(self.point),
        }
    }

    pub fn dim(&self) -> Rational {
        Rational::from_integer(self.n as i64)
    }
}
