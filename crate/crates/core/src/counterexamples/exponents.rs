use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::geometry::{scaling_gap, ExponentConfig, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// Parameter `M → ∞`.
    Knapp,
    /// Parameter `δ → 0`.
    Tube,
    /// Parameter `λ`, exact power law at every scale.
    Scaling,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Knapp => "KNAPP",
            Family::Tube => "TUBE",
            Family::Scaling => "SCALING",
        })
    }
}

/// Power laws `‖U F‖ ~ p^{e_lhs}`, `‖F‖ ~ p^{e_rhs}` in the family parameter
/// `p` (`M`, `δ` or `λ`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedExponents {
    pub family: Family,
    pub e_lhs: Rational,
    pub e_rhs: Rational,
    pub e_quotient: Rational,
}

impl PredictedExponents {
    fn new(family: Family, e_lhs: Rational, e_rhs: Rational) -> Self {
        Self { family, e_lhs, e_rhs, e_quotient: e_lhs - e_rhs }
    }

    /// Whether the quotient stays bounded along the family, i.e. whether the
    /// corresponding necessary condition holds. `M → ∞` needs a
    /// non-positive exponent; `δ → 0` a non-negative one; scaling needs zero.
    pub fn quotient_bounded(&self) -> bool {
        let zero = Rational::from_integer(0);
        match self.family {
            Family::Knapp => self.e_quotient <= zero,
            Family::Tube => self.e_quotient >= zero,
            Family::Scaling => self.e_quotient == zero,
        }
    }
}

/// Predicted slopes for a family, from the exponents of `c`.
///
/// * Knapp: `e_lhs = −n/2 + 1/(2q) + n/r`, `e_rhs = −1/2 + 1/(2q̃′)`.
/// * Tube (slopes in `log δ`): `e_lhs = −1 − 1/(2q) − (n+1)/(2r)`,
///   `e_rhs = −1/(2q̃′) − (n+1)/(2r̃′)`.
/// * Scaling, `F_λ(x, t) = F(λx, λ²t)`: `e_lhs = −2 − n/r − 2/q`,
///   `e_rhs = −n/r̃′ − 2/q̃′`, so `e_quotient = 2·scaling_gap`.
pub fn predicted_exponents(family: Family, c: &ExponentConfig) -> PredictedExponents {
    let n = c.dim();
    let one = Rational::one();
    let two = Rational::from_integer(2);
    let half = Rational::new(1, 2);
    let (x, y, u, v) = (c.point.x, c.point.y, c.inv_qt_prime, c.inv_q);
    match family {
        Family::Knapp => PredictedExponents::new(family, -n * half + v * half + n * y, -half + u * half),
        Family::Tube => PredictedExponents::new(
            family,
            -one - v * half - (n + one) * y * half,
            -u * half - (n + one) * x * half,
        ),
        Family::Scaling => {
            let p = PredictedExponents::new(family, -two - n * y - two * v, -n * x - two * u);
            debug_assert_eq!(p.e_quotient, two * scaling_gap(c));
            p
        }
    }
}
