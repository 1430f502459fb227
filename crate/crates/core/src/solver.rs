//! Exact Fréchet and Skorokhod distances.
//!
//! The Fréchet distance is one of finitely many candidate values: an
//! endpoint distance, a vertex-to-segment distance where some cell edge first
//! becomes free, or a "clamp" value where a monotone passage between two
//! parallel grid lines within one row or column first opens. The candidates
//! are sorted and the smallest one accepted by the decision procedure is the
//! distance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freespace::{check_pair, Cell};
use crate::primitives::{point_segment_raw, two_balls_raw};
use crate::reach::{backtrack, sweep, CellFree, Mode, ReachTable, Window};
use crate::scalar::Scalar;
use crate::types::{lift_trace, norm_dist, NormKind, PolygonalCurve, SampledTrace};

/// Where a candidate value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Distance between the two start points or the two end points.
    Endpoint,
    /// Distance from a vertex of one curve to a segment of the other.
    Entry,
    /// Passage along one row: two vertices of `f` against a segment of `g`.
    HClamp,
    /// Passage along one column: two vertices of `g` against a segment of `f`.
    VClamp,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalValue<T> {
    pub value: T,
    pub provenance: Provenance,
}

/// Number of candidates of each kind before deduplication.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CandidateCounts {
    pub endpoint: usize,
    pub entry: usize,
    pub hclamp: usize,
    pub vclamp: usize,
}

impl CandidateCounts {
    pub fn total(&self) -> usize {
        self.endpoint + self.entry + self.hclamp + self.vclamp
    }
}

/// Sorted candidate values, merged within the tolerance (the smallest
/// representative of each cluster survives).
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalValueSet<T> {
    pub values: Vec<CriticalValue<T>>,
    pub raw_counts: CandidateCounts,
}

impl<T: Scalar> CriticalValueSet<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True when some surviving candidate is within `tol` of `x`.
    pub fn contains(&self, x: T, tol: T) -> bool {
        self.values.iter().any(|c| (c.value - x).abs() <= tol)
    }
}

/// Outcome of a distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrechetResult<T> {
    /// The distance; `+∞` when a bounded window admits no monotone path.
    pub distance: T,
    /// Whether strictly increasing reparameterizations attain the distance.
    pub achieved_bijective: bool,
    /// Number of candidates after deduplication.
    pub critical_value_count: usize,
}

/// A distance query over two curves under one norm, window and tolerance.
#[derive(Debug, Clone, Copy)]
pub struct Problem<'a, T> {
    f: &'a PolygonalCurve<T>,
    g: &'a PolygonalCurve<T>,
    norm: NormKind,
    window: Window,
    tolerance: T,
}

impl<'a, T: Scalar> Problem<'a, T> {
    pub fn new(f: &'a PolygonalCurve<T>, g: &'a PolygonalCurve<T>, norm: NormKind) -> Result<Self> {
        check_pair(f, g, norm)?;
        Ok(Self { f, g, norm, window: Window::Unbounded, tolerance: T::default_tolerance() })
    }

    pub fn with_window(mut self, window: Window) -> Result<Self> {
        if window == Window::Bounded(0) {
            return Err(Error::InvalidWindow);
        }
        self.window = window;
        Ok(self)
    }

    /// Absolute slack `τ` added to δ in every free-space test and used to
    /// merge candidate values.
    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn norm(&self) -> NormKind {
        self.norm
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn tolerance(&self) -> T {
        self.tolerance
    }

    fn effective(&self, delta: T) -> Result<T> {
        if delta.is_nan() || delta < T::zero() {
            return Err(Error::NegativeDelta(delta.as_f64()));
        }
        Ok(delta + self.tolerance)
    }

    /// Whether a monotone path through the free space at level `δ + τ`
    /// connects `(0, 0)` to `(m_f, m_g)`.
    pub fn decide(&self, delta: T, mode: Mode) -> Result<bool> {
        let d = self.effective(delta)?;
        Ok(sweep(self.f, self.g, self.norm, d, mode, self.window, None))
    }

    /// Breakpoints `(ρ_f, ρ_g)` of a monotone path from `(0, 0)` to
    /// `(m_f, m_g)` that stays in the free space at level `δ + τ`.
    pub fn witness(&self, delta: T, mode: Mode) -> Result<Vec<(T, T)>> {
        let d = self.effective(delta)?;
        let mut table = ReachTable::new();
        if !sweep(self.f, self.g, self.norm, d, mode, self.window, Some(&mut table)) {
            return Err(Error::NoWitness);
        }
        backtrack(&table, self.f.segments(), self.g.segments(), mode).ok_or(Error::NoWitness)
    }

    /// Free intervals of the four edges of `cell` at level `delta` (no
    /// tolerance added).
    pub fn cell_free(&self, cell: Cell, delta: T) -> CellFree<T> {
        CellFree::compute(self.f, self.g, cell, delta, self.norm)
    }

    /// All candidate values for the distance.
    pub fn critical_values(&self) -> CriticalValueSet<T> {
        let (f, g, norm, w) = (self.f, self.g, self.norm, self.window);
        let (mf, mg) = (f.segments(), g.segments());
        let mut counts = CandidateCounts::default();
        let mut raw: Vec<CriticalValue<T>> = Vec::new();
        let mut push = |value, provenance| raw.push(CriticalValue { value, provenance });

        push(norm_dist(norm, f.at(0), g.at(0)), Provenance::Endpoint);
        push(norm_dist(norm, f.at(mf), g.at(mg)), Provenance::Endpoint);
        counts.endpoint = 2;

        for j in 0..mg {
            for i in w.band(j, mf) {
                push(point_segment_raw(norm, f.at(i), g.at(j), g.at(j + 1)).0, Provenance::Entry);
                push(point_segment_raw(norm, g.at(j), f.at(i), f.at(i + 1)).0, Provenance::Entry);
                counts.entry += 2;
            }
        }
        // Row j, interior vertical lines a < b: the passage crosses cells
        // a..b of row j, all of which must lie in the window.
        for j in 0..mg {
            for (a, b) in clamp_pairs(mf, j, w) {
                push(two_balls_raw(norm, f.at(a), f.at(b), g.at(j), g.at(j + 1)), Provenance::HClamp);
                counts.hclamp += 1;
            }
        }
        for i in 0..mf {
            for (a, b) in clamp_pairs(mg, i, w) {
                push(two_balls_raw(norm, g.at(a), g.at(b), f.at(i), f.at(i + 1)), Provenance::VClamp);
                counts.vclamp += 1;
            }
        }

        raw.sort_by(|x, y| x.value.partial_cmp(&y.value).expect("finite candidates"));
        let mut values: Vec<CriticalValue<T>> = Vec::with_capacity(raw.len());
        for c in raw {
            match values.last() {
                Some(last) if c.value - last.value <= self.tolerance => {}
                _ => values.push(c),
            }
        }
        CriticalValueSet { values, raw_counts: counts }
    }

    /// The (windowed) Fréchet distance: the least candidate accepted by the
    /// non-bijective decision.
    pub fn distance(&self) -> FrechetResult<T> {
        let set = self.critical_values();
        let vals = &set.values;
        let decide = |d: T| sweep(self.f, self.g, self.norm, d + self.tolerance, Mode::Nonbijective, self.window, None);
        // No candidate below the larger endpoint distance can succeed.
        let floor = vals
            .iter()
            .filter(|c| c.provenance == Provenance::Endpoint)
            .map(|c| c.value)
            .fold(T::zero(), T::max);
        let (mut lo, mut hi) = (vals.partition_point(|c| c.value < floor), vals.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if decide(vals[mid].value) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        let count = vals.len();
        match vals.get(lo) {
            Some(c) => FrechetResult {
                distance: c.value,
                achieved_bijective: sweep(
                    self.f,
                    self.g,
                    self.norm,
                    c.value + self.tolerance,
                    Mode::Bijective,
                    self.window,
                    None,
                ),
                critical_value_count: count,
            },
            None => FrechetResult {
                distance: T::infinity(),
                achieved_bijective: false,
                critical_value_count: count,
            },
        }
    }
}

/// Interior line pairs `1 ≤ a < b ≤ m − 1` along row (or column) `r`, keeping
/// only pairs whose crossed cells `a..b` all lie within the window.
fn clamp_pairs(m: usize, r: usize, w: Window) -> impl Iterator<Item = (usize, usize)> {
    let (lo, hi) = match w {
        Window::Unbounded => (0, m),
        Window::Bounded(w) => (r.saturating_sub(w), (r + w + 1).min(m)),
    };
    // Cells a..=b-1 within [lo, hi) ⇔ lo ≤ a and b ≤ hi.
    let a_lo = lo.max(1);
    let b_hi = hi.min(m.saturating_sub(1));
    (a_lo..b_hi.max(a_lo)).flat_map(move |a| (a + 1..=b_hi).map(move |b| (a, b)))
}

/// Exact Fréchet distance of two curves; `+∞` if a bounded window admits no
/// monotone path.
pub fn frechet_distance<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    window: Window,
) -> Result<T> {
    Ok(Problem::new(f, g, norm)?.with_window(window)?.distance().distance)
}

/// Skorokhod distance of two traces under `max(‖value‖, |time|)`, with `‖·‖`
/// the base of `norm`: the Fréchet distance of the lifted curves.
pub fn skorokhod_distance<T: Scalar>(
    x: &SampledTrace<T>,
    y: &SampledTrace<T>,
    norm: NormKind,
    window: Window,
) -> Result<T> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
    }
    frechet_distance(&lift_trace(x), &lift_trace(y), norm.skoro(), window)
}

/// Decision procedure at level `δ` (plus the default tolerance).
pub fn decide_frechet<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    delta: T,
    mode: Mode,
    window: Window,
) -> Result<bool> {
    Problem::new(f, g, norm)?.with_window(window)?.decide(delta, mode)
}

/// A monotone path witnessing `decide_frechet`, or [`Error::NoWitness`].
pub fn extract_witness<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    delta: T,
    mode: Mode,
    window: Window,
) -> Result<Vec<(T, T)>> {
    Problem::new(f, g, norm)?.with_window(window)?.witness(delta, mode)
}

/// Candidate values for the distance under the default tolerance.
pub fn critical_values<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    window: Window,
) -> Result<CriticalValueSet<T>> {
    Ok(Problem::new(f, g, norm)?.with_window(window)?.critical_values())
}
