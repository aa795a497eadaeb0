use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::duhamel::ModeForcing;
use crate::error::{Error, Result};
use crate::geometry::{fmt_rational, parse_rational, ExponentConfig, ExponentPoint};
use crate::spectral::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ExperimentKind {
    RegionScan,
    Knapp,
    Tube,
    Scaling,
    TdeltaProbe,
    DuhamelVerify,
}

impl ExperimentKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::RegionScan => "REGION_SCAN",
            Self::Knapp => "KNAPP",
            Self::Tube => "TUBE",
            Self::Scaling => "SCALING",
            Self::TdeltaProbe => "TDELTA_PROBE",
            Self::DuhamelVerify => "DUHAMEL_VERIFY",
        }
    }

    /// Lower-case file stem for emitted reports.
    pub fn stem(&self) -> String {
        self.as_str().to_ascii_lowercase()
    }

    /// Parameter list used when the config gives none.
    pub fn default_params(&self) -> Vec<f64> {
        match self {
            Self::Knapp => vec![16.0, 32.0, 64.0, 128.0],
            Self::Tube => vec![0.5, 0.25, 0.125, 0.0625],
            Self::Scaling => vec![2.0],
            Self::TdeltaProbe => (2..=6).map(|k| 2f64.powi(-k)).collect(),
            Self::RegionScan | Self::DuhamelVerify => Vec::new(),
        }
    }

    fn fits_slopes(&self) -> bool {
        matches!(self, Self::Knapp | Self::Tube | Self::TdeltaProbe)
    }
}

/// Exponents as rational strings (`"1/4"`, `"0"`, `"1"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExponentSpec {
    pub inv_q: String,
    pub inv_qt_prime: String,
    pub inv_rt_prime: String,
    pub inv_r: String,
}

impl ExponentSpec {
    pub fn resolve(&self, n: u32) -> Result<ExponentConfig> {
        let point = ExponentPoint::new(parse_rational(&self.inv_rt_prime)?, parse_rational(&self.inv_r)?)?;
        ExponentConfig::new(n, parse_rational(&self.inv_q)?, parse_rational(&self.inv_qt_prime)?, point)
    }

    pub fn from_config(c: &ExponentConfig) -> Self {
        Self {
            inv_q: fmt_rational(c.inv_q),
            inv_qt_prime: fmt_rational(c.inv_qt_prime),
            inv_rt_prime: fmt_rational(c.point.x),
            inv_r: fmt_rational(c.point.y),
        }
    }
}

/// Explicit grid; per-axis lists must have length `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridParams {
    pub extents: Vec<f64>,
    pub counts: Vec<usize>,
    pub t_extent: f64,
    pub t_count: usize,
    #[serde(default)]
    pub t_origin: f64,
}

impl GridParams {
    pub fn build(&self, n: u32) -> Result<GridSpec> {
        if self.extents.len() != n as usize {
            return Err(Error::Config(format!("grid has {} axes, n = {n}", self.extents.len())));
        }
        Ok(GridSpec::new(self.extents.clone(), self.counts.clone(), self.t_extent, self.t_count)?.with_t_origin(self.t_origin))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Operator (output / quotient) slope tolerance.
    pub operator_slope: f64,
    /// Input-norm slope tolerance.
    pub input_slope: f64,
    /// Dyadic synthesis vs time stepping, relative `L²`.
    pub oracle: f64,
    /// Time-side vs multiplier `T_δ`, relative `L²`, per `δ`.
    pub dual_path: f64,
    /// Tube quotient slope, two-sided.
    pub quotient_slope: f64,
    /// Scaling: relative deviation of the ratio from 1 when the gap is 0.
    pub scaling_ratio: f64,
    /// Scaling: deviation of `log₂ ratio` from `2g·log₂ λ`.
    pub scaling_log2: f64,
    /// Tube: floor for `δ · min |U F|` shared by every `δ`.
    pub tube_floor: f64,
    /// Tube: bound on the sampled phase `|P|`.
    pub phase_bound: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            operator_slope: 0.3,
            input_slope: 0.15,
            oracle: 1e-3,
            dual_path: 1e-4,
            quotient_slope: 0.35,
            scaling_ratio: 0.01,
            scaling_log2: 0.05,
            tube_floor: 0.05,
            phase_bound: 10.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionOptions {
    /// Raster step, a rational string such as `"1/40"`.
    pub step: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct KnappOptions {
    pub window: (f64, f64),
    pub c_x: f64,
    pub substeps: usize,
}

impl Default for KnappOptions {
    fn default() -> Self {
        Self { window: (0.25, 0.5), c_x: 0.5, substeps: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct TubeOptions {
    pub c1: f64,
    pub c2: f64,
    /// Mollifier edge width in the argument of `Φ`.
    pub w: f64,
    pub phase_samples: usize,
}

impl Default for TubeOptions {
    fn default() -> Self {
        Self { c1: 4.0, c2: 8.0, w: 0.25, phase_samples: 20_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScalingOptions {
    /// Band-limited base forcing; its seed is replaced by the sweep seed.
    pub forcing: ModeForcing,
}

impl Default for ScalingOptions {
    fn default() -> Self {
        Self { forcing: ModeForcing { modes: 3, max_xi: 1.0, omega_band: (0.3, 0.5), sigma: 4.0, seed: 0 } }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ProbeOptions {
    /// `1/r̃` and `1/r` as rational strings.
    pub inv_rt: String,
    pub inv_r: String,
    pub tau_band: (f64, f64),
}

impl Default for ProbeOptions {
    fn default() -> Self {
        Self { inv_rt: "1/2".into(), inv_r: "1/6".into(), tau_band: (-5.0, 1.0) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifyOptions {
    pub k_min: i32,
    pub k_max: i32,
    pub oracle_substeps: usize,
    /// Exponents `k` of the `δ = 2^k` checked along both `T_δ` paths.
    pub dual_k: Vec<i32>,
    /// Forcing; its seed is replaced by the sweep seed.
    pub forcing: ModeForcing,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { k_min: -8, k_max: 8, oracle_substeps: 16, dual_k: vec![-8, -7, -6, -5, -4], forcing: ModeForcing::default() }
    }
}

fn default_seed() -> u64 {
    7
}

/// One sweep. Only the option block matching `kind` may be present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub kind: ExperimentKind,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub configs: Vec<ExponentSpec>,
    /// `M`, `δ` or `λ` values; kind defaults when empty.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridParams>,
    #[serde(default)]
    pub tolerances: Tolerances,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    /// Store wall-clock timings in the report (breaks byte-identity).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub record_timings: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub region: Option<RegionOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knapp: Option<KnappOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tube: Option<TubeOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scaling: Option<ScalingOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyOptions>,
}

impl SweepConfig {
    /// Bare config of `kind` in dimension `n`, everything else defaulted.
    pub fn new(kind: ExperimentKind, n: u32) -> Self {
        Self {
            kind,
            n,
            configs: Vec::new(),
            params: Vec::new(),
            grid: None,
            tolerances: Tolerances::default(),
            seed: default_seed(),
            output: None,
            record_timings: false,
            region: None,
            knapp: None,
            tube: None,
            scaling: None,
            probe: None,
            verify: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn params(&self) -> Vec<f64> {
        if self.params.is_empty() {
            self.kind.default_params()
        } else {
            self.params.clone()
        }
    }

    pub fn exponent_configs(&self) -> Result<Vec<ExponentConfig>> {
        self.configs.iter().map(|c| c.resolve(self.n)).collect()
    }

    /// Fail-fast structural checks; numerical preconditions are checked per
    /// parameter when the sweep runs.
    pub fn validate(&self) -> Result<()> {
        use ExperimentKind::*;
        let bad = |m: String| Err(Error::Config(m));
        if self.n == 0 || self.n > 8 {
            return bad(format!("n = {} outside 1..=8", self.n));
        }
        let present = [
            (RegionScan, self.region.is_some()),
            (Knapp, self.knapp.is_some()),
            (Tube, self.tube.is_some()),
            (Scaling, self.scaling.is_some()),
            (TdeltaProbe, self.probe.is_some()),
            (DuhamelVerify, self.verify.is_some()),
        ];
        if let Some((k, _)) = present.iter().find(|(k, p)| *p && *k != self.kind) {
            return bad(format!("option block for {} in a {} sweep", k.as_str(), self.kind.as_str()));
        }
        if self.grid.is_some() && !matches!(self.kind, Scaling | TdeltaProbe | DuhamelVerify) {
            return bad(format!("{} builds its grids per parameter; drop `grid`", self.kind.as_str()));
        }
        let needs_configs = matches!(self.kind, Knapp | Tube | Scaling);
        if needs_configs && self.configs.is_empty() {
            return bad(format!("{} needs at least one exponent config", self.kind.as_str()));
        }
        if !needs_configs && !self.configs.is_empty() {
            return bad(format!("{} takes no exponent configs", self.kind.as_str()));
        }
        self.exponent_configs()?;
        let params = self.params();
        if matches!(self.kind, RegionScan | DuhamelVerify) && !self.params.is_empty() {
            return bad(format!("{} takes no parameter list", self.kind.as_str()));
        }
        if params.iter().any(|p| !(p.is_finite() && *p > 0.0)) {
            return bad("parameters must be positive".into());
        }
        if params.windows(2).any(|w| w[1] != 2.0 * w[0] && w[0] != 2.0 * w[1]) {
            return bad("parameter list must be geometric with ratio 2".into());
        }
        if params.len() >= 3 && params.windows(3).any(|w| (w[1] > w[0]) != (w[2] > w[1])) {
            return bad("parameter list must be monotone".into());
        }
        if self.kind.fits_slopes() && params.len() < 3 {
            return bad("slope fits need at least 3 parameters".into());
        }
        if self.kind == RegionScan {
            let step = parse_rational(&self.region.clone().unwrap_or_else(default_region).step)?;
            if step <= crate::geometry::Rational::from_integer(0) || step > crate::geometry::Rational::from_integer(1) {
                return bad("raster step must lie in (0, 1]".into());
            }
        }
        Ok(())
    }
}

pub(crate) fn default_region() -> RegionOptions {
    RegionOptions { step: "1/40".into() }
}
