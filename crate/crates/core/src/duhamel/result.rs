use std::path::Path;

use serde::{Deserialize, Serialize};

use super::scale::DyadicScale;
use crate::error::Result;
use crate::spectral::io::write_field_with_sidecar;
use crate::spectral::{Field, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    TimeStepped,
    DyadicSynthesis,
    TimeSideOracle,
}

/// Where the Duhamel integral starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerLimit {
    /// `∫_0^t`; requires `t = 0` to be a grid time.
    Zero,
    /// `∫_{−∞}^t`, realised from the first grid time (the forcing must vanish
    /// before it).
    #[default]
    GridStart,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Truncation {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dyadic_window: Option<(i32, i32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<DyadicScale>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_limit: Option<LowerLimit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub substeps: Option<usize>,
    pub quadrature_order: u32,
}

#[derive(Debug, Clone)]
pub struct DuhamelResult {
    pub field: Field,
    pub method: Method,
    pub truncation: Truncation,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    method: Method,
    truncation: &'a Truncation,
    grid: &'a GridSpec,
}

impl DuhamelResult {
    /// Field binary at `path` plus a JSON sidecar with method and truncation.
    pub fn write(&self, path: &Path) -> Result<()> {
        let meta = Sidecar { method: self.method, truncation: &self.truncation, grid: self.field.grid() };
        write_field_with_sidecar(path, &self.field, &meta)
    }
}
