use super::point::{dual_point, rat, ExponentPoint};
use crate::error::{Error, Result};

/// The named corner points for `n ≥ 3` and their duals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertices {
    pub n: u32,
    pub b: ExponentPoint,
    pub c: ExponentPoint,
    pub p: ExponentPoint,
    pub q: ExponentPoint,
    pub r: ExponentPoint,
    pub s: ExponentPoint,
}

impl Vertices {
    pub fn b_dual(&self) -> ExponentPoint {
        dual_point(self.b)
    }
    pub fn c_dual(&self) -> ExponentPoint {
        dual_point(self.c)
    }
    pub fn p_dual(&self) -> ExponentPoint {
        dual_point(self.p)
    }
    pub fn q_dual(&self) -> ExponentPoint {
        dual_point(self.q)
    }
    pub fn r_dual(&self) -> ExponentPoint {
        dual_point(self.r)
    }
    pub fn s_dual(&self) -> ExponentPoint {
        dual_point(self.s)
    }

    /// All twelve points, labelled `B, C, P, Q, R, S, B′, …, S′`.
    pub fn named(&self) -> [(&'static str, ExponentPoint); 12] {
        [
            ("B", self.b),
            ("C", self.c),
            ("P", self.p),
            ("Q", self.q),
            ("R", self.r),
            ("S", self.s),
            ("B'", self.b_dual()),
            ("C'", self.c_dual()),
            ("P'", self.p_dual()),
            ("Q'", self.q_dual()),
            ("R'", self.r_dual()),
            ("S'", self.s_dual()),
        ]
    }

    pub fn get(&self, label: &str) -> Option<ExponentPoint> {
        self.named().into_iter().find(|(l, _)| *l == label).map(|(_, p)| p)
    }
}

/// Corner points of the admissibility diagram, valid for `n ≥ 3`.
pub fn vertices(n: u32) -> Result<Vertices> {
    if n < 3 {
        return Err(Error::Dimension { n, reason: "vertex formulas need n >= 3" });
    }
    Ok(corner_points(n as i64))
}

/// The vertex formulas without the `n ≥ 3` guard. For `n = 2` the points
/// `B, P, Q` still land in the unit square and are reused by the planar regions.
pub(crate) fn corner_points(n: i64) -> Vertices {
    let pt = |x, y| ExponentPoint::raw(x, y);
    Vertices {
        n: n as u32,
        b: pt(rat(n + 3, 2 * (n + 2)), rat(n - 1, 2 * (n + 2))),
        c: pt(rat(1, 2), rat(n - 2, 2 * n)),
        p: pt(rat(n + 2, 2 * (n + 1)), rat(n * n, 2 * (n + 1) * (n + 2))),
        q: pt(rat(n + 2, 2 * (n + 1)), rat(n - 2, 2 * (n + 1))),
        r: pt(rat(n + 1, 2 * n), rat(n - 3, 2 * n)),
        s: pt(rat(n, 2 * (n - 1)), rat((n - 2) * (n - 2), 2 * n * (n - 1))),
    }
}
