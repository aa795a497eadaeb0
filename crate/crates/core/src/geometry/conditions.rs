use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::point::{rat, ExponentConfig, ExponentPoint, Rational};
use super::vertices::corner_points;

/// Identifiers of the individual necessary conditions.
///
/// Config-level ids come from [`necessary_check`]; the point-level ids
/// (`rcon*`, `x-gap`, `corner`) come from [`point_violations`] and describe
/// why a point falls outside the necessary region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConditionId {
    /// Scaling balance `1/q̃′ − 1/q + (n/2)(x − y) = 1`.
    #[serde(rename = "scale")]
    Scale,
    /// `r̃′ < 2 < r`.
    #[serde(rename = "x-cond:order")]
    XOrder,
    /// `x − y ≤ 2/n`.
    #[serde(rename = "x-cond:gap")]
    XGap,
    /// `x + y ≥ 1 − 1/n`.
    #[serde(rename = "x-cond:sum-lower")]
    XSumLower,
    /// `x + y ≤ 1 + 1/n`.
    #[serde(rename = "x-cond:sum-upper")]
    XSumUpper,
    /// `1/q ≤ 1/q̃′`.
    #[serde(rename = "t-cond:order")]
    TOrder,
    /// `1/q < n(1/2 − y)`.
    #[serde(rename = "t-cond:q")]
    TQ,
    /// `1/q̃′ > 1 − n(x − 1/2)`.
    #[serde(rename = "t-cond:qt")]
    TQt,
    /// `1/q̃′ − 1/q + (n+1)(x − y) ≥ 2`.
    #[serde(rename = "q2")]
    Q2,
    /// `1/q̃′ − 1/q ≥ 2ny − n + 1`.
    #[serde(rename = "q3:first")]
    Q3First,
    /// `1/q̃′ − 1/q ≥ n + 1 − 2nx`.
    #[serde(rename = "q3:second")]
    Q3Second,
    /// `x − y ≥ 2/(n+2)`: the tube condition under scaling.
    #[serde(rename = "rcon1")]
    Rcon1,
    /// `x + 3y ≤ 2`: first Knapp condition under scaling.
    #[serde(rename = "rcon2:first")]
    Rcon2First,
    /// `3x + y ≥ 2`: second Knapp condition under scaling.
    #[serde(rename = "rcon2:second")]
    Rcon2Second,
    /// The removed corners `R`, `R′`.
    #[serde(rename = "corner")]
    Corner,
}

impl ConditionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConditionId::Scale => "scale",
            ConditionId::XOrder => "x-cond:order",
            ConditionId::XGap => "x-cond:gap",
            ConditionId::XSumLower => "x-cond:sum-lower",
            ConditionId::XSumUpper => "x-cond:sum-upper",
            ConditionId::TOrder => "t-cond:order",
            ConditionId::TQ => "t-cond:q",
            ConditionId::TQt => "t-cond:qt",
            ConditionId::Q2 => "q2",
            ConditionId::Q3First => "q3:first",
            ConditionId::Q3Second => "q3:second",
            ConditionId::Rcon1 => "rcon1",
            ConditionId::Rcon2First => "rcon2:first",
            ConditionId::Rcon2Second => "rcon2:second",
            ConditionId::Corner => "corner",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `g = 1/q̃′ − 1/q + (n/2)(x − y) − 1`; zero exactly on the scaling line.
pub fn scaling_gap(c: &ExponentConfig) -> Rational {
    let p = c.point;
    c.inv_qt_prime - c.inv_q + c.dim() * rat(1, 2) * (p.x - p.y) - Rational::one()
}

/// Every necessary condition violated by `c`, in declaration order.
pub fn necessary_check(c: &ExponentConfig) -> Vec<ConditionId> {
    let n = c.dim();
    let one = Rational::one();
    let half = rat(1, 2);
    let (x, y) = (c.point.x, c.point.y);
    let (u, v) = (c.inv_qt_prime, c.inv_q);
    let d = u - v;

    let checks = [
        (ConditionId::Scale, scaling_gap(c).is_zero()),
        (ConditionId::XOrder, x > half && y < half),
        (ConditionId::XGap, x - y <= rat(2, 1) / n),
        (ConditionId::XSumLower, x + y >= one - one / n),
        (ConditionId::XSumUpper, x + y <= one + one / n),
        (ConditionId::TOrder, v <= u),
        (ConditionId::TQ, v < n * (half - y)),
        (ConditionId::TQt, u > one - n * (x - half)),
        (ConditionId::Q2, d + (n + one) * (x - y) >= rat(2, 1)),
        (ConditionId::Q3First, d >= rat(2, 1) * n * y - n + one),
        (ConditionId::Q3Second, d >= n + one - rat(2, 1) * n * x),
    ];
    checks.into_iter().filter(|(_, ok)| !ok).map(|(id, _)| id).collect()
}

/// Half-plane reasons for `p` to lie outside the necessary region of
/// dimension `n`: the conditions `q2`, `q3` and `x − y ≤ 2/n` evaluated on the
/// scaling line, plus the removed corners for `n ≥ 3`.
pub fn point_violations(n: u32, p: ExponentPoint) -> Vec<ConditionId> {
    let nn = Rational::from_integer(n as i64);
    let two = rat(2, 1);
    let (x, y) = (p.x, p.y);
    let mut out = Vec::new();
    if x - y < two / (nn + two) {
        out.push(ConditionId::Rcon1);
    }
    if x - y > two / nn {
        out.push(ConditionId::XGap);
    }
    if x + rat(3, 1) * y > two {
        out.push(ConditionId::Rcon2First);
    }
    if rat(3, 1) * x + y < two {
        out.push(ConditionId::Rcon2Second);
    }
    if n >= 3 {
        let v = corner_points(n as i64);
        if p == v.r || p == v.r_dual() {
            out.push(ConditionId::Corner);
        }
    }
    out
}
