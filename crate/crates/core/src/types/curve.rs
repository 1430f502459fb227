use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::Point;

/// A polygonal curve with vertices `P(0), …, P(m)`, parameterized over
/// `[0, m]` with one unit of parameter per segment.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalCurve<T> {
    vertices: Vec<Point<T>>,
}

impl<T: Scalar> PolygonalCurve<T> {
    /// Requires at least two vertices of one common dimension.
    pub fn new(vertices: Vec<Point<T>>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::TooFewSamples { found: vertices.len() });
        }
        let n = vertices[0].dim();
        if let Some(bad) = vertices.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
        }
        Ok(Self { vertices })
    }

    /// Builds a curve from rows of raw coordinates.
    pub fn from_coords(rows: Vec<Vec<T>>) -> Result<Self> {
        let vertices = rows
            .into_iter()
            .enumerate()
            .map(|(index, row)| {
                Point::new(row).map_err(|e| match e {
                    Error::NonFiniteValue { .. } => Error::NonFiniteValue { index },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    pub(crate) fn from_validated(vertices: Vec<Point<T>>) -> Self {
        debug_assert!(vertices.len() >= 2);
        Self { vertices }
    }

    /// Number of segments `m`.
    pub fn segments(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> &Point<T> {
        &self.vertices[k]
    }

    /// Raw coordinates of vertex `k`.
    #[inline]
    pub(crate) fn at(&self, k: usize) -> &[T] {
        self.vertices[k].coords()
    }

    /// Largest norm of a segment vector `P(k+1) − P(k)`.
    pub fn max_segment_length(&self, norm: super::NormKind) -> T {
        (0..self.segments()).fold(T::zero(), |acc, k| {
            acc.max(super::norm_dist(norm, self.at(k + 1), self.at(k)))
        })
    }
}

/// The point `P(ρ)` for `ρ ∈ [0, m]`; exact at integer parameters.
pub fn curve_point<T: Scalar>(curve: &PolygonalCurve<T>, rho: T) -> Result<Point<T>> {
    let m = curve.segments();
    if !(rho >= T::zero() && rho <= T::of_usize(m)) {
        return Err(Error::OutOfDomain { param: rho.as_f64(), max: m });
    }
    let i = rho.floor().to_usize().unwrap_or(0).min(m - 1);
    let lambda = rho - T::of_usize(i);
    Ok(curve.vertex(i).lerp(curve.vertex(i + 1), lambda))
}
