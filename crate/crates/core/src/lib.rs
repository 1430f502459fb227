//! Exact Skorokhod distances between polygonal traces and exact Fréchet
//! distances between polygonal curves in R^n.
//!
//! Supported norms are L1, L2 and L∞ together with their time-augmented
//! variants, where the last coordinate of a point is a time stamp and the
//! distance is `max(‖value‖, |time|)`. The Skorokhod distance of two traces is
//! the Fréchet distance of their lifted curves under the time-augmented norm.
//!
//! The crate is generic over the floating-point scalar (anything implementing
//! [`Scalar`], i.e. `f32` and `f64`); the aliases at the crate root fix the
//! scalar to `f64`, which is what the CLI and the trace file formats use.
//!
//! ```
//! use skorokhod::{skorokhod_distance, validate_trace, NormKind, Window};
//!
//! let x = validate_trace(vec![(0.0f64, vec![0.0]), (10.0, vec![100.0])]).unwrap();
//! let y = validate_trace(vec![(0.0, vec![0.0]), (11.0, vec![100.0])]).unwrap();
//! let d = skorokhod_distance(&x, &y, NormKind::L2, Window::Unbounded).unwrap();
//! assert!((d - 1.0).abs() < 1e-9);
//! ```

pub mod error;
pub mod freespace;
pub mod io;
pub mod oracle;
pub mod primitives;
pub mod reach;
pub mod scalar;
pub mod solver;
pub mod types;

pub use error::{Error, Result};
pub use freespace::{free_edge_interval, Cell, EdgeId, EdgeInterval};
pub use primitives::{
    delta_dagger, dist_point_segment, min_delta_two_balls_segment, pl_convex_minimize, AbsTerm,
    PLObjective, SegmentParam,
};
pub use reach::{propagate_cell, CellFree, CellReach, EdgeReach, Mode, Window};
pub use scalar::Scalar;
pub use solver::{
    critical_values, decide_frechet, extract_witness, frechet_distance, skorokhod_distance,
    CandidateCounts, CriticalValue, CriticalValueSet,
    FrechetResult, Problem, Provenance,
};
pub use types::{
    curve_point, interpolate, lift_trace, norm_eval, validate_trace, EpsValue, Interval, NormKind,
    Point, PolygonalCurve, Sample, SampledTrace,
};

/// A point with `f64` coordinates.
pub type Point64 = types::Point<f64>;
/// A sampled trace with `f64` timestamps and values.
pub type Trace = types::SampledTrace<f64>;
/// A polygonal curve with `f64` vertices.
pub type Curve = types::PolygonalCurve<f64>;
/// An `f64` distance problem over two borrowed curves.
pub type Problem64<'a> = solver::Problem<'a, f64>;
