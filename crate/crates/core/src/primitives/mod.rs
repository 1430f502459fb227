//! Geometric primitives: the distance from a point to a segment, the least
//! radius at which two balls and a segment share a point, and the exact 1-D
//! convex piecewise-linear minimizer both reduce to for the polyhedral norms.

mod dagger;
mod pl;
mod segment;

pub use dagger::delta_dagger;
pub use pl::{pl_convex_minimize, AbsTerm, PLObjective, PlMinimum};
pub(crate) use pl::pl_sum_sublevel;
pub use segment::{dist_point_segment, min_delta_two_balls_segment};
pub(crate) use segment::{point_segment_raw, two_balls_raw};

use crate::scalar::Scalar;

/// A parameter `λ ∈ [0, 1]` along a segment.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SegmentParam<T>(T);

impl<T: Scalar> SegmentParam<T> {
    /// Returns `None` outside `[0, 1]`.
    pub fn new(lambda: T) -> Option<Self> {
        (lambda >= T::zero() && lambda <= T::one()).then_some(Self(lambda))
    }

    /// Clamps into `[0, 1]`; NaN maps to 0.
    pub(crate) fn clamped(lambda: T) -> Self {
        if lambda.is_nan() {
            Self(T::zero())
        } else {
            Self(lambda.max(T::zero()).min(T::one()))
        }
    }

    pub fn value(self) -> T {
        self.0
    }
}
