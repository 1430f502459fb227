use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the geometry is computed in.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Absolute tolerance used when comparing distances against a threshold.
    const DEFAULT_TOLERANCE: f64;

    /// Converts an `f64` literal. Panics only for values the type cannot hold
    /// at all, which never happens for the finite literals used in this crate.
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    #[inline]
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("index fits in scalar")
    }

    fn default_tolerance() -> Self {
        Self::of(Self::DEFAULT_TOLERANCE)
    }

    /// Lossy conversion used for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const DEFAULT_TOLERANCE: f64 = 1e-9;
}

impl Scalar for f32 {
    const DEFAULT_TOLERANCE: f64 = 1e-4;
}
