//! Points, traces, curves, norms and the small value types shared by the
//! free-space and reachability code.

mod curve;
mod eps;
mod interval;
mod norm;
mod point;
mod trace;

pub use curve::{curve_point, PolygonalCurve};
pub use eps::EpsValue;
pub use interval::Interval;
pub use norm::{norm_eval, NormKind};
pub(crate) use norm::{norm_dist, norm_with};
pub use point::Point;
pub use trace::{interpolate, lift_trace, validate_trace, Sample, SampledTrace};
