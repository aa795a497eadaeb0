use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::point::{rat, ExponentPoint, Rational};
use super::vertices::{corner_points, vertices};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegionId {
    /// Closed trapezoid `B B′ R′ R` without `R, R′`.
    N,
    /// Open hexagon `P Q R R′ Q′ P′` plus the open segments `(P, P′)`, `(R, R′)`.
    S,
    /// Closed hexagon `P Q S S′ Q′ P′` without `[P, Q]`, `[P′, Q′]`, `S`, `S′`.
    H,
    /// Closed triangle `(2/3, 0), (1, 0), (1, 1/3)`.
    #[serde(rename = "TRIANGLE_1D")]
    Triangle1d,
    /// Open pentagon `P Q (1,0) Q′ P′` plus the open segment `(P, P′)`.
    #[serde(rename = "PENTAGON_2D")]
    Pentagon2d,
}

impl RegionId {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegionId::N => "N",
            RegionId::S => "S",
            RegionId::H => "H",
            RegionId::Triangle1d => "TRIANGLE_1D",
            RegionId::Pentagon2d => "PENTAGON_2D",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "N" => Some(RegionId::N),
            "S" => Some(RegionId::S),
            "H" => Some(RegionId::H),
            "TRIANGLE_1D" => Some(RegionId::Triangle1d),
            "PENTAGON_2D" => Some(RegionId::Pentagon2d),
            _ => None,
        }
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Strictly convex polygon with counter-clockwise vertices and explicit
/// boundary semantics. Edge `i` joins vertex `i` to vertex `i + 1 (mod m)`;
/// `edge_included[i]` refers to its relative interior only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: RegionId,
    pub n: u32,
    pub labels: Vec<String>,
    pub vertices: Vec<ExponentPoint>,
    pub edge_included: Vec<bool>,
    pub vertex_included: Vec<bool>,
}

/// `(b − a) × (c − a)`; positive when `c` lies left of the ray `a → b`.
pub(crate) fn cross(a: ExponentPoint, b: ExponentPoint, c: ExponentPoint) -> Rational {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Andrew's monotone chain; collinear points are dropped.
fn convex_hull(points: &[ExponentPoint]) -> Vec<ExponentPoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<ExponentPoint> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &ExponentPoint>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= Rational::zero() {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Labelled corner with its inclusion flag.
pub(crate) struct Corner<'a> {
    pub label: &'a str,
    pub point: ExponentPoint,
    pub included: bool,
}

impl Region {
    /// Orders the corners counter-clockwise and attaches the flags. Every edge
    /// listed in `open_edges` (unordered label pairs) is included, all others
    /// are not.
    pub(crate) fn assemble(id: RegionId, n: u32, corners: &[Corner<'_>], open_edges: &[(&str, &str)]) -> Result<Self> {
        let pts: Vec<_> = corners.iter().map(|c| c.point).collect();
        let hull = convex_hull(&pts);
        if hull.len() != corners.len() {
            return Err(Error::Exponent(format!(
                "region {id} for n = {n} is not strictly convex ({} of {} corners on the hull)",
                hull.len(),
                corners.len()
            )));
        }
        let corner_of = |p: ExponentPoint| corners.iter().find(|c| c.point == p).expect("hull point is a corner");
        let labels: Vec<String> = hull.iter().map(|&p| corner_of(p).label.to_string()).collect();
        let vertex_included = hull.iter().map(|&p| corner_of(p).included).collect();
        let m = hull.len();
        let edge_included = (0..m)
            .map(|i| {
                let (a, b) = (labels[i].as_str(), labels[(i + 1) % m].as_str());
                open_edges.iter().any(|&(u, v)| (u == a && v == b) || (u == b && v == a))
            })
            .collect();
        let region = Self { id, n, labels, vertices: hull, edge_included, vertex_included };
        debug_assert!(region.is_strictly_convex());
        Ok(region)
    }

    pub fn is_strictly_convex(&self) -> bool {
        let m = self.vertices.len();
        m >= 3
            && (0..m).all(|i| {
                cross(self.vertices[i], self.vertices[(i + 1) % m], self.vertices[(i + 2) % m]) > Rational::zero()
            })
    }

    /// Exact membership with the boundary flags honoured.
    pub fn contains(&self, p: ExponentPoint) -> bool {
        let m = self.vertices.len();
        if let Some(i) = self.vertices.iter().position(|&v| v == p) {
            return self.vertex_included[i];
        }
        let mut on_edge = None;
        for i in 0..m {
            let c = cross(self.vertices[i], self.vertices[(i + 1) % m], p);
            if c < Rational::zero() {
                return false;
            }
            if c.is_zero() {
                on_edge = Some(i);
            }
        }
        match on_edge {
            Some(i) => self.edge_included[i],
            None => true,
        }
    }

    /// Membership in the closed polygon, ignoring the flags.
    pub fn contains_closed(&self, p: ExponentPoint) -> bool {
        let m = self.vertices.len();
        (0..m).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % m], p) >= Rational::zero())
    }

    pub fn vertex(&self, label: &str) -> Option<ExponentPoint> {
        self.labels.iter().position(|l| l == label).map(|i| self.vertices[i])
    }

    /// Centroid of the vertices (an interior point of a convex polygon).
    pub fn vertex_centroid(&self) -> ExponentPoint {
        let m = Rational::from_integer(self.vertices.len() as i64);
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((Rational::zero(), Rational::zero()), |(a, b), v| (a + v.x, b + v.y));
        ExponentPoint::raw(sx / m, sy / m)
    }
}

/// Builds one of the named regions of the admissibility diagram.
pub fn build_region(n: u32, id: RegionId) -> Result<Region> {
    let mismatch = || Error::RegionMismatch { id: id.as_str(), n };
    let corner = |label, point, included| Corner { label, point, included };
    match id {
        RegionId::N => {
            let v = vertices(n).map_err(|_| mismatch())?;
            Region::assemble(
                id,
                n,
                &[
                    corner("B", v.b, true),
                    corner("R", v.r, false),
                    corner("R'", v.r_dual(), false),
                    corner("B'", v.b_dual(), true),
                ],
                &[("B", "R"), ("R", "R'"), ("R'", "B'"), ("B'", "B")],
            )
        }
        RegionId::S => {
            let v = vertices(n).map_err(|_| mismatch())?;
            Region::assemble(
                id,
                n,
                &[
                    corner("P", v.p, false),
                    corner("Q", v.q, false),
                    corner("R", v.r, false),
                    corner("R'", v.r_dual(), false),
                    corner("Q'", v.q_dual(), false),
                    corner("P'", v.p_dual(), false),
                ],
                &[("P", "P'"), ("R", "R'")],
            )
        }
        RegionId::H => {
            let v = vertices(n).map_err(|_| mismatch())?;
            Region::assemble(
                id,
                n,
                &[
                    corner("P", v.p, false),
                    corner("Q", v.q, false),
                    corner("S", v.s, false),
                    corner("S'", v.s_dual(), false),
                    corner("Q'", v.q_dual(), false),
                    corner("P'", v.p_dual(), false),
                ],
                &[("Q", "S"), ("S", "S'"), ("S'", "Q'"), ("P'", "P")],
            )
        }
        RegionId::Triangle1d => {
            if n != 1 {
                return Err(mismatch());
            }
            let [a, b, c] = triangle_corners();
            Region::assemble(
                id,
                n,
                &[corner("A", a, true), corner("O", b, true), corner("A'", c, true)],
                &[("A", "O"), ("O", "A'"), ("A'", "A")],
            )
        }
        RegionId::Pentagon2d => {
            if n != 2 {
                return Err(mismatch());
            }
            let v = corner_points(2);
            let one_zero = ExponentPoint::raw(Rational::one(), Rational::zero());
            Region::assemble(
                id,
                n,
                &[
                    corner("P", v.p, false),
                    corner("Q", v.q, false),
                    corner("O", one_zero, false),
                    corner("Q'", v.q_dual(), false),
                    corner("P'", v.p_dual(), false),
                ],
                &[("P", "P'")],
            )
        }
    }
}

/// `(2/3, 0)`, `(1, 0)`, `(1, 1/3)`.
pub(crate) fn triangle_corners() -> [ExponentPoint; 3] {
    [
        ExponentPoint::raw(rat(2, 3), Rational::zero()),
        ExponentPoint::raw(Rational::one(), Rational::zero()),
        ExponentPoint::raw(Rational::one(), rat(1, 3)),
    ]
}
