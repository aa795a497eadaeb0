use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::conditions::{point_violations, ConditionId};
use super::point::{rat, ExponentConfig, ExponentPoint, Rational};
use super::region::{build_region, triangle_corners, Corner, Region, RegionId};
use super::vertices::corner_points;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictKind {
    Sufficient,
    OpenGap,
    Excluded,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Sufficient => "SUFFICIENT",
            VerdictKind::OpenGap => "OPEN_GAP",
            VerdictKind::Excluded => "EXCLUDED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Non-empty exactly when `kind` is `Excluded`.
    pub violated: Vec<ConditionId>,
}

/// Region outside of which the estimate fails: `N(n)` for `n ≥ 3`, the
/// closed triangle for `n = 1` and, for `n = 2`, the same four half-planes
/// as `N(n)` (a closed pentagon, no corner removed).
pub fn necessary_region(n: u32) -> Result<Region> {
    match n {
        0 => Err(Error::Dimension { n, reason: "dimension must be positive" }),
        1 => build_region(1, RegionId::Triangle1d),
        2 => {
            let v = corner_points(2);
            let [a, o, a2] = triangle_corners();
            let corner = |label, point| Corner { label, point, included: true };
            Region::assemble(
                RegionId::N,
                2,
                &[
                    corner("B", v.b),
                    corner("A", a),
                    corner("O", o),
                    corner("A'", a2),
                    corner("B'", v.b_dual()),
                ],
                &[("B", "A"), ("A", "O"), ("O", "A'"), ("A'", "B'"), ("B'", "B")],
            )
        }
        _ => build_region(n, RegionId::N),
    }
}

/// Region where the estimate is known to hold: `S(n)` for `n ≥ 3`, the open
/// pentagon for `n = 2`, and for `n = 1` the triangle with its two closed
/// legs removed (interior plus the open hypotenuse).
pub fn sufficient_region(n: u32) -> Result<Region> {
    match n {
        0 => Err(Error::Dimension { n, reason: "dimension must be positive" }),
        1 => {
            let [a, o, a2] = triangle_corners();
            let corner = |label, point| Corner { label, point, included: false };
            Region::assemble(
                RegionId::Triangle1d,
                1,
                &[corner("A", a), corner("O", o), corner("A'", a2)],
                &[("A'", "A")],
            )
        }
        2 => build_region(2, RegionId::Pentagon2d),
        _ => build_region(n, RegionId::S),
    }
}

/// Three-way verdict for the point `p` in dimension `n`.
pub fn classify(n: u32, p: ExponentPoint) -> Result<Verdict> {
    let necessary = necessary_region(n)?;
    if !necessary.contains(p) {
        let mut violated = point_violations(n, p);
        if violated.is_empty() {
            // only the unit-square edges x ≤ 1, y ≥ 0 can remain; they coincide
            // with `r̃′ ≥ 1`, `r ≤ ∞` and never bind inside the square
            violated.push(ConditionId::XOrder);
        }
        return Ok(Verdict { kind: VerdictKind::Excluded, violated });
    }
    let kind = if sufficient_region(n)?.contains(p) { VerdictKind::Sufficient } else { VerdictKind::OpenGap };
    Ok(Verdict { kind, violated: Vec::new() })
}

/// The one-dimensional sufficient condition on the time exponents:
/// `1 < q̃ < 2 < q < ∞` and `x − y + 1/(2q̃) − 1/(2q) ≥ 1`, where `1/q̃` is read
/// as the stored input time reciprocal.
pub fn check_theorem_1d(c: &ExponentConfig) -> Result<bool> {
    if c.n != 1 {
        return Err(Error::Dimension { n: c.n, reason: "the one-dimensional criterion needs n = 1" });
    }
    let half = rat(1, 2);
    let zero = rat(0, 1);
    let (u, v) = (c.inv_qt_prime, c.inv_q);
    let exponents_ok = half < u && u < rat(1, 1) && zero < v && v < half;
    let p = c.point;
    Ok(exponents_ok && p.x - p.y + half * u - half * v >= Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::dual_point;
    use crate::geometry::vertices::vertices;

    fn pt(x: (i64, i64), y: (i64, i64)) -> ExponentPoint {
        ExponentPoint::from_ratios(x, y).unwrap()
    }

    #[test]
    fn n3_examples() {
        let v = vertices(3).unwrap();
        assert_eq!(classify(3, v.b).unwrap().kind, VerdictKind::OpenGap);
        let r = classify(3, v.r).unwrap();
        assert_eq!(r.kind, VerdictKind::Excluded);
        assert_eq!(r.violated, vec![ConditionId::Corner]);
        assert_eq!(classify(3, pt((7, 10), (3, 10))).unwrap().kind, VerdictKind::Sufficient);
    }

    #[test]
    fn excluded_points_carry_reasons() {
        let v = classify(3, pt((11, 20), (1, 4))).unwrap();
        assert_eq!(v.kind, VerdictKind::Excluded);
        assert!(v.violated.contains(&ConditionId::Rcon1));
        let v = classify(3, pt((1, 2), (1, 2))).unwrap();
        assert!(!v.violated.is_empty());
    }

    #[test]
    fn one_dimensional_boundaries() {
        // legs of the triangle are necessary but not sufficient
        assert_eq!(classify(1, pt((5, 6), (0, 1))).unwrap().kind, VerdictKind::OpenGap);
        assert_eq!(classify(1, pt((1, 1), (1, 6))).unwrap().kind, VerdictKind::OpenGap);
        assert_eq!(classify(1, pt((5, 6), (1, 6))).unwrap().kind, VerdictKind::Sufficient);
        assert_eq!(classify(1, pt((9, 10), (1, 10))).unwrap().kind, VerdictKind::Sufficient);
        assert_eq!(classify(1, pt((2, 3), (0, 1))).unwrap().kind, VerdictKind::OpenGap);
        assert_eq!(classify(1, pt((1, 2), (0, 1))).unwrap().kind, VerdictKind::Excluded);
    }

    #[test]
    fn two_dimensional_pentagon() {
        assert_eq!(classify(2, pt((5, 6), (1, 6))).unwrap().kind, VerdictKind::Sufficient);
        // segment (P, P′) added
        assert_eq!(classify(2, pt((3, 4), (1, 4))).unwrap().kind, VerdictKind::Sufficient);
        assert_eq!(classify(2, pt((5, 8), (1, 8))).unwrap().kind, VerdictKind::OpenGap);
        assert_eq!(classify(2, pt((3, 5), (1, 5))).unwrap().kind, VerdictKind::Excluded);
    }

    #[test]
    fn symmetric_on_named_points() {
        for n in 3..=8 {
            for (_, p) in vertices(n).unwrap().named() {
                assert_eq!(classify(n, p).unwrap().kind, classify(n, dual_point(p)).unwrap().kind);
            }
        }
    }

    #[test]
    fn theorem_1d_examples() {
        let c = ExponentConfig::new(1, rat(1, 4), rat(3, 4), pt((5, 6), (0, 1))).unwrap();
        assert!(check_theorem_1d(&c).unwrap());
        let c = ExponentConfig::new(1, rat(1, 4), rat(1, 2), pt((2, 3), (0, 1))).unwrap();
        assert!(!check_theorem_1d(&c).unwrap());
        let c = ExponentConfig::new(1, rat(1, 10), rat(9, 10), pt((7, 10), (0, 1))).unwrap();
        assert!(check_theorem_1d(&c).unwrap());
        let c = ExponentConfig::new(2, rat(1, 10), rat(9, 10), pt((7, 10), (0, 1))).unwrap();
        assert!(check_theorem_1d(&c).is_err());
    }
}
