use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The six supported norms.
///
/// The skoro variants treat the last coordinate as time and return
/// `max(‖value‖, |time|)`, with `‖·‖` the corresponding base norm on the
/// leading coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    L1,
    L2,
    Linf,
    L1Skoro,
    L2Skoro,
    LinfSkoro,
}

impl NormKind {
    pub const ALL: [NormKind; 6] = [
        NormKind::L1,
        NormKind::L2,
        NormKind::Linf,
        NormKind::L1Skoro,
        NormKind::L2Skoro,
        NormKind::LinfSkoro,
    ];

    pub fn is_skoro(self) -> bool {
        matches!(self, NormKind::L1Skoro | NormKind::L2Skoro | NormKind::LinfSkoro)
    }

    /// The norm applied to the value coordinates.
    pub fn base(self) -> NormKind {
        match self {
            NormKind::L1 | NormKind::L1Skoro => NormKind::L1,
            NormKind::L2 | NormKind::L2Skoro => NormKind::L2,
            NormKind::Linf | NormKind::LinfSkoro => NormKind::Linf,
        }
    }

    /// The time-augmented variant of this norm's base.
    pub fn skoro(self) -> NormKind {
        match self.base() {
            NormKind::L1 => NormKind::L1Skoro,
            NormKind::L2 => NormKind::L2Skoro,
            _ => NormKind::LinfSkoro,
        }
    }

    /// Smallest admissible dimension: skoro norms need a value coordinate and
    /// a time coordinate.
    pub fn min_dim(self) -> usize {
        if self.is_skoro() {
            2
        } else {
            1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::L1 => "l1",
            NormKind::L2 => "l2",
            NormKind::Linf => "linf",
            NormKind::L1Skoro => "l1skoro",
            NormKind::L2Skoro => "l2skoro",
            NormKind::LinfSkoro => "linfskoro",
        }
    }

    pub(crate) fn check_dim(self, n: usize) -> Result<()> {
        if n < self.min_dim() {
            return Err(Error::DimensionMismatch { expected: self.min_dim(), found: n });
        }
        Ok(())
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        NormKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown norm `{s}`"))
    }
}

/// Evaluates the norm of the vector whose k-th coordinate is `coord(k)`.
#[inline]
pub(crate) fn norm_with<T: Scalar>(norm: NormKind, n: usize, coord: impl Fn(usize) -> T) -> T {
    let value_dims = if norm.is_skoro() { n - 1 } else { n };
    let base = match norm.base() {
        NormKind::L1 => (0..value_dims).fold(T::zero(), |acc, k| acc + coord(k).abs()),
        NormKind::L2 => {
            // Scale by the largest magnitude so the sum of squares cannot
            // overflow or lose small components.
            let scale = (0..value_dims).fold(T::zero(), |acc, k| acc.max(coord(k).abs()));
            if scale == T::zero() {
                T::zero()
            } else {
                let sum = (0..value_dims).fold(T::zero(), |acc, k| {
                    let c = coord(k) / scale;
                    acc + c * c
                });
                scale * sum.sqrt()
            }
        }
        _ => (0..value_dims).fold(T::zero(), |acc, k| acc.max(coord(k).abs())),
    };
    if norm.is_skoro() {
        base.max(coord(n - 1).abs())
    } else {
        base
    }
}

/// `‖a − b‖` without allocating the difference.
#[inline]
pub(crate) fn norm_dist<T: Scalar>(norm: NormKind, a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    norm_with(norm, a.len(), |k| a[k] - b[k])
}

/// Norm of a vector; skoro norms require at least two coordinates.
pub fn norm_eval<T: Scalar>(norm: NormKind, v: &[T]) -> Result<T> {
    norm.check_dim(v.len())?;
    Ok(norm_with(norm, v.len(), |k| v[k]))
}
