use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::config::SweepConfig;
use super::fit::SlopeFit;
use crate::error::{Error, Result};
use crate::geometry::ClassificationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Pass,
    Fail,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
        })
    }
}

/// Direction of a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `measured ≤ target + tolerance`
    AtMost,
    /// `measured ≥ target − tolerance`
    AtLeast,
    /// `|measured − target| ≤ tolerance`
    Within,
    /// `measured > target`
    Above,
}

/// A verdict together with the raw numbers it was decided from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<usize>,
    /// `None` when the measurement could not be produced (always FAIL).
    pub measured: Option<f64>,
    pub target: f64,
    pub tolerance: f64,
    pub relation: Relation,
    pub outcome: Outcome,
}

impl Check {
    pub fn new(name: impl Into<String>, config: Option<usize>, measured: Option<f64>, target: f64, tolerance: f64, relation: Relation) -> Self {
        let mut c = Self { name: name.into(), config, measured, target, tolerance, relation, outcome: Outcome::Fail };
        c.outcome = c.evaluate();
        c
    }

    /// Recomputes the outcome from the stored numbers.
    pub fn evaluate(&self) -> Outcome {
        let Some(m) = self.measured else { return Outcome::Fail };
        let (t, tol) = (self.target, self.tolerance);
        let ok = match self.relation {
            Relation::AtMost => m <= t + tol,
            Relation::AtLeast => m >= t - tol,
            Relation::Within => (m - t).abs() <= tol,
            Relation::Above => m > t,
        };
        if ok && m.is_finite() {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Measured values at one parameter for one exponent config.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub config: usize,
    pub param: f64,
    pub values: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitRecord {
    pub config: usize,
    pub quantity: String,
    pub points: usize,
    pub slope: f64,
    pub stderr: f64,
    pub intercept: f64,
    /// Slope change when the largest parameter is dropped (needs ≥ 4 points).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drop_largest_shift: Option<f64>,
}

impl FitRecord {
    pub fn new(config: usize, quantity: &str, points: usize, fit: SlopeFit, drop_largest_shift: Option<f64>) -> Self {
        Self {
            config,
            quantity: quantity.into(),
            points,
            slope: fit.slope,
            stderr: fit.stderr,
            intercept: fit.intercept,
            drop_largest_shift,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PredictedRecord {
    pub config: usize,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_rhs: Option<String>,
    pub e_quotient: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamFailure {
    pub config: usize,
    pub param: f64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub config: usize,
    pub param: f64,
    pub seconds: f64,
}

/// Self-contained record of a sweep; re-runnable from `config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub artifact_version: String,
    pub config: SweepConfig,
    pub rows: Vec<Row>,
    #[serde(default)]
    pub summary: BTreeMap<String, f64>,
    pub fits: Vec<FitRecord>,
    pub predicted: Vec<PredictedRecord>,
    pub checks: Vec<Check>,
    pub failures: Vec<ParamFailure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub raster: Vec<ClassificationRecord>,
    pub notes: Vec<String>,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<Timing>,
}

impl SweepReport {
    /// PASS iff there are no per-parameter failures and every check passes.
    pub fn recompute_outcome(&self) -> Outcome {
        if self.failures.is_empty() && self.checks.iter().all(|c| c.evaluate() == Outcome::Pass) {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// One row per parameter (and config): the parameter followed by every
    /// measured value, columns sorted by name. Region scans emit their raster.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if !self.raster.is_empty() {
            out.push_str("n,x,y,verdict,violated\n");
            for r in &self.raster {
                let violated: Vec<&str> = r.violated.iter().map(|c| c.as_str()).collect();
                let _ = writeln!(out, "{},{},{},{},{}", r.n, r.x, r.y, r.verdict, violated.join(";"));
            }
            return out;
        }
        let keys: BTreeSet<&String> = self.rows.iter().flat_map(|r| r.values.keys()).collect();
        out.push_str("config,param");
        for k in &keys {
            out.push(',');
            out.push_str(k);
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(out, "{},{}", r.config, r.param);
            for k in &keys {
                match r.values.get(*k) {
                    Some(v) => {
                        let _ = write!(out, ",{v}");
                    }
                    None => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown format {other:?} (json, csv)"))),
        }
    }
}

/// Parses a comma-separated format list such as `"json,csv"`.
pub fn parse_formats(s: &str) -> Result<Vec<Format>> {
    let mut v: Vec<Format> = Vec::new();
    for f in s.split(',').filter(|p| !p.trim().is_empty()) {
        let f: Format = f.parse()?;
        if !v.contains(&f) {
            v.push(f);
        }
    }
    if v.is_empty() {
        return Err(Error::Config("empty format list".into()));
    }
    Ok(v)
}

/// Writes `<dir>/<kind>.json` and/or `<dir>/<kind>.csv`.
pub fn emit_report(report: &SweepReport, formats: &[Format], dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let stem = report.config.kind.stem();
    formats
        .iter()
        .map(|f| {
            let (path, body) = match f {
                Format::Json => (dir.join(format!("{stem}.json")), report.to_json()?),
                Format::Csv => (dir.join(format!("{stem}.csv")), report.to_csv()),
            };
            std::fs::write(&path, body).map_err(|e| Error::io(&path, e))?;
            Ok(path)
        })
        .collect()
}
