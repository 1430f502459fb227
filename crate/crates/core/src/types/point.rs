use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A point of R^n with finite coordinates, n ≥ 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyPoint);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteValue { index: 0 });
        }
        Ok(Self { coords })
    }

    pub fn from_slice(coords: &[T]) -> Result<Self> {
        Self::new(coords.to_vec())
    }

    /// Skips validation; callers guarantee non-empty, finite coordinates.
    pub(crate) fn new_unchecked(coords: Vec<T>) -> Self {
        debug_assert!(!coords.is_empty());
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    /// Convex combination `(1-λ)·self + λ·other`, exact at λ = 0 and λ = 1.
    pub fn lerp(&self, other: &Self, lambda: T) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| (T::one() - lambda) * a + lambda * b)
            .collect();
        Self { coords }
    }
}

impl<T: Scalar> std::ops::Index<usize> for Point<T> {
    type Output = T;

    fn index(&self, k: usize) -> &T {
        &self.coords[k]
    }
}
