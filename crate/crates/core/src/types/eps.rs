use std::cmp::Ordering;

use crate::scalar::Scalar;

/// A real number, optionally raised by an infinitesimal: `plus == true`
/// stands for `base + ε`.
///
/// Ordering is lexicographic, so `(a, exact) < (a, plus) < (b, _)` whenever
/// `a < b`. This encodes open lower bounds on reachable intervals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsValue<T> {
    pub base: T,
    pub plus: bool,
}

impl<T: Scalar> EpsValue<T> {
    pub fn exact(base: T) -> Self {
        Self { base, plus: false }
    }

    pub fn plus(base: T) -> Self {
        Self { base, plus: true }
    }

    /// True when the exact value `x` is not below `self`.
    pub fn le_value(self, x: T) -> bool {
        if self.plus {
            self.base < x
        } else {
            self.base <= x
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl<T: Scalar> PartialOrd for EpsValue<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.base.partial_cmp(&other.base)? {
            Ordering::Equal => Some(self.plus.cmp(&other.plus)),
            ord => Some(ord),
        }
    }
}
