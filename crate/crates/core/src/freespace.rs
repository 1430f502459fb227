//! Free space on the boundary of one cell of the free-space diagram.
//!
//! Cell `(i, j)` is the square `[i, i+1] × [j, j+1]` of `(ρ_f, ρ_g)`
//! parameters. A point is free at level δ when `‖f(ρ_f) − g(ρ_g)‖ ≤ δ`.
//! Free space is convex inside every cell, so its trace on each edge is a
//! single closed interval.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::primitives::AbsTerm;
use crate::scalar::Scalar;
use crate::types::{norm_with, Interval, NormKind, PolygonalCurve};

/// Cell `(i, j)`: segment `i` of `f` against segment `j` of `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

/// The four edges of a cell, in counter-clockwise order from the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeId {
    Bottom = 0,
    Right = 1,
    Top = 2,
    Left = 3,
}

impl EdgeId {
    pub const ALL: [EdgeId; 4] = [EdgeId::Bottom, EdgeId::Right, EdgeId::Top, EdgeId::Left];

    pub fn from_index(q: usize) -> Option<Self> {
        Self::ALL.get(q).copied()
    }

    /// Bottom and top edges vary in `ρ_f`; left and right edges in `ρ_g`.
    pub fn is_horizontal(self) -> bool {
        matches!(self, EdgeId::Bottom | EdgeId::Top)
    }
}

/// The free part of one cell edge, in absolute diagram coordinates along the
/// edge's varying parameter. `span == None` means no point of the edge is
/// free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeInterval<T> {
    pub edge: EdgeId,
    pub span: Option<Interval<T>>,
}

/// Free interval of one edge of `cell` at level `delta`.
///
/// ```
/// use skorokhod::{free_edge_interval, Cell, EdgeId, NormKind, PolygonalCurve};
///
/// let f = PolygonalCurve::from_coords(vec![vec![0.0], vec![1.0]]).unwrap();
/// let g = PolygonalCurve::from_coords(vec![vec![0.0], vec![0.0]]).unwrap();
/// let e = free_edge_interval(&f, &g, Cell::new(0, 0), EdgeId::Top, 0.5, NormKind::Linf).unwrap();
/// let span = e.span.unwrap();
/// assert_eq!((span.lo, span.hi), (0.0, 0.5));
/// ```
pub fn free_edge_interval<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    cell: Cell,
    edge: EdgeId,
    delta: T,
    norm: NormKind,
) -> Result<EdgeInterval<T>> {
    check_pair(f, g, norm)?;
    if delta.is_nan() || delta < T::zero() {
        return Err(Error::NegativeDelta(delta.as_f64()));
    }
    if cell.i >= f.segments() || cell.j >= g.segments() {
        return Err(Error::OutOfDomain {
            param: if cell.i >= f.segments() { cell.i as f64 } else { cell.j as f64 },
            max: if cell.i >= f.segments() { f.segments() } else { g.segments() },
        });
    }
    Ok(EdgeInterval { edge, span: edge_span(f, g, cell, edge, delta, norm) })
}

pub(crate) fn check_pair<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
) -> Result<()> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: f.dim(), found: g.dim() });
    }
    norm.check_dim(f.dim())
}

/// Unchecked edge computation shared with the decision procedure.
#[inline]
pub(crate) fn edge_span<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    cell: Cell,
    edge: EdgeId,
    delta: T,
    norm: NormKind,
) -> Option<Interval<T>> {
    let Cell { i, j } = cell;
    let (s, z, z2, offset) = match edge {
        EdgeId::Bottom => (g.at(j), f.at(i), f.at(i + 1), i),
        EdgeId::Top => (g.at(j + 1), f.at(i), f.at(i + 1), i),
        EdgeId::Left => (f.at(i), g.at(j), g.at(j + 1), j),
        EdgeId::Right => (f.at(i + 1), g.at(j), g.at(j + 1), j),
    };
    let (lo, hi) = free_interval_raw(norm, s, z, z2, delta)?;
    let offset = T::of_usize(offset);
    Some(Interval { lo: offset + lo, hi: offset + hi })
}

/// `{λ ∈ [0,1] : ‖z − s + λ(z' − z)‖ ≤ δ}` as `(lo, hi)`.
pub(crate) fn free_interval_raw<T: Scalar>(
    norm: NormKind,
    s: &[T],
    z: &[T],
    z2: &[T],
    delta: T,
) -> Option<(T, T)> {
    let n = s.len();
    match norm {
        NormKind::L1 => l1_interval(s, z, z2, delta),
        NormKind::L2 => l2_interval(s, z, z2, delta),
        NormKind::Linf | NormKind::LinfSkoro => linf_interval(s, z, z2, delta),
        NormKind::L1Skoro | NormKind::L2Skoro => {
            let nv = n - 1;
            let (sv, zv, z2v) = (&s[..nv], &z[..nv], &z2[..nv]);
            let value = if norm == NormKind::L1Skoro {
                l1_interval(sv, zv, z2v, delta)?
            } else {
                l2_interval(sv, zv, z2v, delta)?
            };
            let time = abs_interval(z[nv] - s[nv], z2[nv] - z[nv], delta)?;
            intersect(value, time)
        }
    }
}

fn intersect<T: Scalar>(a: (T, T), b: (T, T)) -> Option<(T, T)> {
    let lo = a.0.max(b.0);
    let hi = a.1.min(b.1);
    (lo <= hi).then_some((lo, hi))
}

/// `{λ ∈ [0,1] : |a + bλ| ≤ δ}`.
fn abs_interval<T: Scalar>(a: T, b: T, delta: T) -> Option<(T, T)> {
    if b == T::zero() {
        return (a.abs() <= delta).then_some((T::zero(), T::one()));
    }
    let r1 = (-delta - a) / b;
    let r2 = (delta - a) / b;
    intersect((r1.min(r2), r1.max(r2)), (T::zero(), T::one()))
}

fn linf_interval<T: Scalar>(s: &[T], z: &[T], z2: &[T], delta: T) -> Option<(T, T)> {
    (0..s.len()).try_fold((T::zero(), T::one()), |acc, k| {
        intersect(acc, abs_interval(z[k] - s[k], z2[k] - z[k], delta)?)
    })
}

fn l1_interval<T: Scalar>(s: &[T], z: &[T], z2: &[T], delta: T) -> Option<(T, T)> {
    let terms: Vec<AbsTerm<T>> =
        (0..s.len()).map(|k| AbsTerm::new(z[k] - s[k], z2[k] - z[k])).collect();
    crate::primitives::pl_sum_sublevel(&terms, delta)
}

/// The L2 sublevel set `|w + λd| ≤ δ` is centred at the foot of the
/// perpendicular `λc = −(w·d)/|d|²` with half-width `√(δ² − r²)/|d|`, where
/// `r` is the perpendicular distance. Computing `r` from the residual vector
/// keeps full precision even when δ is tiny compared with `|w|`; `r = δ` is
/// the tangent (single point) case.
fn l2_interval<T: Scalar>(s: &[T], z: &[T], z2: &[T], delta: T) -> Option<(T, T)> {
    let (mut wd, mut dd) = (T::zero(), T::zero());
    for k in 0..s.len() {
        let d = z2[k] - z[k];
        wd = wd + (z[k] - s[k]) * d;
        dd = dd + d * d;
    }
    if dd == T::zero() {
        let r = norm_with(NormKind::L2, s.len(), |k| z[k] - s[k]);
        return (r <= delta).then_some((T::zero(), T::one()));
    }
    let centre = -wd / dd;
    let r = norm_with(NormKind::L2, s.len(), |k| z[k] - s[k] + centre * (z2[k] - z[k]));
    if r > delta {
        return None;
    }
    let half = ((delta - r) * (delta + r)).sqrt() / dd.sqrt();
    intersect((centre - half, centre + half), (T::zero(), T::one()))
}
