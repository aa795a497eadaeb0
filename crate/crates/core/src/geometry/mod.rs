//! Exact admissibility geometry in the `(1/r̃′, 1/r)` plane.
//!
//! Every quantity in this module is an exact rational. The horizontal
//! coordinate `x` is the reciprocal of the space exponent of the forcing
//! norm `L^{r̃′}_x L^{q̃′}_t`, the vertical coordinate `y` is the reciprocal
//! of the space exponent of the solution norm `L^r_x L^q_t`.

mod classify;
mod conditions;
mod feasible;
mod point;
mod record;
mod region;
mod vertices;

pub use classify::{check_theorem_1d, classify, necessary_region, sufficient_region, Verdict, VerdictKind};
pub use conditions::{necessary_check, point_violations, scaling_gap, ConditionId};
pub use feasible::{feasible_q_interval, Endpoint, QInterval};
pub use point::{dual_point, parse_rational, ExponentConfig, ExponentPoint, Rational};
pub use record::{fmt_rational, ClassificationRecord, RegionRecord};
pub use region::{build_region, Region, RegionId};
pub use vertices::{vertices, Vertices};
