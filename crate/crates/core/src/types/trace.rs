use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{Point, PolygonalCurve};

/// One time-stamped observation of a trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample<T> {
    pub time: T,
    pub value: Point<T>,
}

/// A discrete-time trace: at least two samples with strictly increasing
/// timestamps and values of one common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledTrace<T> {
    samples: Vec<Sample<T>>,
}

impl<T: Scalar> SampledTrace<T> {
    pub fn samples(&self) -> &[Sample<T>] {
        &self.samples
    }

    /// Dimension of the sample values.
    pub fn dim(&self) -> usize {
        self.samples[0].value.dim()
    }

    /// Number of segments, one less than the number of samples.
    pub fn segments(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn into_samples(self) -> Vec<Sample<T>> {
        self.samples
    }
}

/// Validates raw `(time, coords)` pairs into a trace.
///
/// ```
/// use skorokhod::{validate_trace, Error};
///
/// assert!(validate_trace(vec![(0.0, vec![0.0]), (1.0, vec![10.0])]).is_ok());
/// assert_eq!(
///     validate_trace(vec![(0.0, vec![0.0]), (0.0, vec![10.0])]),
///     Err(Error::NonIncreasingTime { index: 1 })
/// );
/// ```
pub fn validate_trace<T: Scalar>(raw: Vec<(T, Vec<T>)>) -> Result<SampledTrace<T>> {
    if raw.len() < 2 {
        return Err(Error::TooFewSamples { found: raw.len() });
    }
    let n = raw[0].1.len();
    if n == 0 {
        return Err(Error::EmptyPoint);
    }
    let mut samples = Vec::with_capacity(raw.len());
    for (index, (time, coords)) in raw.into_iter().enumerate() {
        if coords.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: coords.len() });
        }
        if !time.is_finite() || coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteValue { index });
        }
        if let Some(prev) = samples.last() {
            let prev: &Sample<T> = prev;
            if time <= prev.time {
                return Err(Error::NonIncreasingTime { index });
            }
        }
        samples.push(Sample { time, value: Point::new_unchecked(coords) });
    }
    Ok(SampledTrace { samples })
}

/// The polygonal curve through the sample values; timestamps are dropped.
pub fn interpolate<T: Scalar>(trace: &SampledTrace<T>) -> PolygonalCurve<T> {
    PolygonalCurve::from_validated(trace.samples.iter().map(|s| s.value.clone()).collect())
}

/// The curve in R^{n+1} whose vertex k is `(x_k, t_k)`: the value coordinates
/// followed by the timestamp.
pub fn lift_trace<T: Scalar>(trace: &SampledTrace<T>) -> PolygonalCurve<T> {
    let vertices = trace
        .samples
        .iter()
        .map(|s| {
            let mut coords = Vec::with_capacity(s.value.dim() + 1);
            coords.extend_from_slice(s.value.coords());
            coords.push(s.time);
            Point::new_unchecked(coords)
        })
        .collect();
    PolygonalCurve::from_validated(vertices)
}
