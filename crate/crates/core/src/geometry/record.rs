use serde::{Deserialize, Serialize};

use super::classify::Verdict;
use super::conditions::ConditionId;
use super::point::{parse_rational, ExponentPoint, Rational};
use super::region::Region;
use crate::error::Result;

/// Always `"p/q"`, including integers (`"1/1"`).
pub fn fmt_rational(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn point_strings(p: ExponentPoint) -> [String; 2] {
    [fmt_rational(p.x), fmt_rational(p.y)]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionRecord {
    pub n: u32,
    pub region: String,
    pub labels: Vec<String>,
    pub vertices: Vec<[String; 2]>,
    pub edge_included: Vec<bool>,
    pub vertex_included: Vec<bool>,
}

impl From<&Region> for RegionRecord {
    fn from(r: &Region) -> Self {
        Self {
            n: r.n,
            region: r.id.as_str().to_string(),
            labels: r.labels.clone(),
            vertices: r.vertices.iter().map(|&p| point_strings(p)).collect(),
            edge_included: r.edge_included.clone(),
            vertex_included: r.vertex_included.clone(),
        }
    }
}

impl RegionRecord {
    pub fn points(&self) -> Result<Vec<ExponentPoint>> {
        self.vertices
            .iter()
            .map(|[x, y]| ExponentPoint::new(parse_rational(x)?, parse_rational(y)?))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub n: u32,
    pub x: String,
    pub y: String,
    pub verdict: String,
    pub violated: Vec<ConditionId>,
}

impl ClassificationRecord {
    pub fn new(n: u32, p: ExponentPoint, v: &Verdict) -> Self {
        Self { n, x: fmt_rational(p.x), y: fmt_rational(p.y), verdict: v.kind.to_string(), violated: v.violated.clone() }
    }
}
