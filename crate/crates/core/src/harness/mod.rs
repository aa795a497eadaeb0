//! Sweep configuration, execution, slope fitting and reports.

mod config;
mod fit;
mod report;
mod run;

pub use config::{
    ExperimentKind, ExponentSpec, GridParams, KnappOptions, ProbeOptions, RegionOptions, ScalingOptions, SweepConfig, Tolerances,
    TubeOptions, VerifyOptions,
};
pub use fit::{fit_slope, SlopeFit};
pub use report::{
    emit_report, parse_formats, Check, FitRecord, Format, Outcome, ParamFailure, PredictedRecord, Relation, Row, SweepReport, Timing,
};
pub use run::{run_sweep, ARTIFACT_VERSION, WRAP_BUDGET};
