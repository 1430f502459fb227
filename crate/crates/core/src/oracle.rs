//! Brute-force reference computations on uniform parameter grids.
//!
//! These depend only on norm evaluation and curve interpolation, never on
//! the exact solvers, so they can serve as independent checks.

use crate::error::{Error, Result};
use crate::freespace::check_pair;
use crate::reach::Window;
use crate::scalar::Scalar;
use crate::types::{norm_with, NormKind, Point, PolygonalCurve};

/// `K` subdivisions per unit of curve parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    k: usize,
}

impl GridSpec {
    /// Requires `K ≥ 2`.
    pub fn new(k: usize) -> Option<Self> {
        (k >= 2).then_some(Self { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

fn seg_norm<T: Scalar>(norm: NormKind, s: &[T], z: &[T], z2: &[T], lambda: T) -> T {
    norm_with(norm, s.len(), |k| (T::one() - lambda) * z[k] + lambda * z2[k] - s[k])
}

/// Minimum over `λ ∈ {0, 1/K, …, 1}` of `‖z − s + λ(z' − z)‖`.
pub fn oracle_point_segment<T: Scalar>(s: &Point<T>, z: &Point<T>, z2: &Point<T>, norm: NormKind, k: usize) -> T {
    let kk = T::of_usize(k.max(1));
    (0..=k).fold(T::infinity(), |best, step| {
        let l = T::of_usize(step) / kk;
        best.min(seg_norm(norm, s.coords(), z.coords(), z2.coords(), l))
    })
}

/// Minimum over the same λ grid of the larger of the two point distances.
pub fn oracle_min_delta_segment<T: Scalar>(
    s1: &Point<T>,
    s2: &Point<T>,
    z: &Point<T>,
    z2: &Point<T>,
    norm: NormKind,
    k: usize,
) -> T {
    let kk = T::of_usize(k.max(1));
    let (z, z2) = (z.coords(), z2.coords());
    (0..=k).fold(T::infinity(), |best, step| {
        let l = T::of_usize(step) / kk;
        best.min(seg_norm(norm, s1.coords(), z, z2, l).max(seg_norm(norm, s2.coords(), z, z2, l)))
    })
}

/// Samples `curve` at parameters `p / K`, flattened row-major.
fn sample<T: Scalar>(curve: &PolygonalCurve<T>, k: usize) -> Vec<T> {
    let n = curve.dim();
    let kk = T::of_usize(k);
    let mut out = Vec::with_capacity((curve.segments() * k + 1) * n);
    for seg in 0..curve.segments() {
        let (a, b) = (curve.at(seg), curve.at(seg + 1));
        for step in 0..k {
            let l = T::of_usize(step) / kk;
            out.extend((0..n).map(|c| (T::one() - l) * a[c] + l * b[c]));
        }
    }
    out.extend_from_slice(curve.at(curve.segments()));
    out
}

/// Cells (along one axis) containing grid index `p`: its own cell and, on a
/// cell boundary, the cell before.
fn cells_of(p: usize, k: usize, m: usize) -> [Option<usize>; 2] {
    let own = (p / k).min(m - 1);
    let prev = (p.is_multiple_of(k) && p / k >= 1).then(|| p / k - 1);
    [Some(own), prev.filter(|&c| c != own)]
}

/// Bracket `(lower, upper)` around the Fréchet distance.
///
/// `upper` is the discrete Fréchet distance of the grid samples: the
/// staircase of grid pairs, interpolated linearly, is a monotone matching of
/// the curves whose cost never exceeds the cost at its grid points. `lower`
/// subtracts the largest displacement caused by snapping a continuous
/// matching to the grid, `(L_f + L_g)/K` with `L` the longest segment.
/// Under a bounded window only steps inside a common in-window cell are
/// allowed; `(∞, ∞)` means no window-respecting staircase exists.
pub fn oracle_frechet<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    grid: GridSpec,
    window: Window,
) -> Result<(T, T)> {
    check_pair(f, g, norm)?;
    if window == Window::Bounded(0) {
        return Err(Error::InvalidWindow);
    }
    let k = grid.k;
    let n = f.dim();
    let (mf, mg) = (f.segments(), g.segments());
    let (fs, gs) = (sample(f, k), sample(g, k));
    let (np, nq) = (mf * k + 1, mg * k + 1);
    let dist = |p: usize, q: usize| {
        let (a, b) = (&fs[p * n..p * n + n], &gs[q * n..q * n + n]);
        norm_with(norm, n, |c| a[c] - b[c])
    };
    let bounded = matches!(window, Window::Bounded(_));
    let step_ok = |p0: usize, q0: usize, p1: usize, q1: usize| {
        if !bounded {
            return true;
        }
        let (cp0, cp1) = (cells_of(p0, k, mf), cells_of(p1, k, mf));
        let (cq0, cq1) = (cells_of(q0, k, mg), cells_of(q1, k, mg));
        cp0.iter().flatten().filter(|i| cp1.contains(&Some(**i))).any(|&i| {
            cq0.iter()
                .flatten()
                .filter(|j| cq1.contains(&Some(**j)))
                .any(|&j| window.allows(i, j))
        })
    };

    let inf = T::infinity();
    let mut prev = vec![inf; nq];
    let mut cur = vec![inf; nq];
    for p in 0..np {
        for q in 0..nq {
            let reach = if p == 0 && q == 0 {
                T::neg_infinity()
            } else {
                let mut best = inf;
                if p > 0 && step_ok(p - 1, q, p, q) {
                    best = best.min(prev[q]);
                }
                if q > 0 && step_ok(p, q - 1, p, q) {
                    best = best.min(cur[q - 1]);
                }
                if p > 0 && q > 0 && step_ok(p - 1, q - 1, p, q) {
                    best = best.min(prev[q - 1]);
                }
                best
            };
            cur[q] = if reach == inf { inf } else { reach.max(dist(p, q)) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let upper = prev[nq - 1];
    if upper == inf {
        return Ok((inf, inf));
    }
    let slack = (f.max_segment_length(norm) + g.max_segment_length(norm)) / T::of_usize(k);
    Ok(((upper - slack).max(T::zero()), upper))
}
