//! Reachability through the free-space diagram.
//!
//! A monotone path from `(0, 0)` to `(m_f, m_g)` inside the free space exists
//! iff the two curves are within δ in Fréchet distance. The sweep visits cells
//! row by row, carrying for each cell the reachable part of its left and
//! bottom edges and whether its bottom-left corner is reachable, and derives
//! the reachable part of its right and top edges.
//!
//! Non-bijective mode admits non-decreasing paths (reachable sets stay
//! closed). Bijective mode admits only strictly increasing paths, so a lower
//! bound reached "from strictly below" is open; this is tracked with
//! [`EpsValue`] lower bounds.

use crate::freespace::{edge_span, Cell, EdgeId};
use crate::scalar::Scalar;
use crate::types::{norm_dist, EpsValue, Interval, NormKind, PolygonalCurve};

/// Which reparameterizations are admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Strictly increasing, bijective reparameterizations.
    Bijective,
    /// Continuous non-decreasing reparameterizations.
    Nonbijective,
}

/// Restriction of the diagram to cells with `|i − j| ≤ W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Window {
    #[default]
    Unbounded,
    Bounded(usize),
}

impl Window {
    #[inline]
    pub fn allows(self, i: usize, j: usize) -> bool {
        match self {
            Window::Unbounded => true,
            Window::Bounded(w) => i.abs_diff(j) <= w,
        }
    }

    pub fn width(self) -> Option<usize> {
        match self {
            Window::Unbounded => None,
            Window::Bounded(w) => Some(w),
        }
    }

    /// Cell columns `i` of row `j` inside the window, for `m_f` columns.
    #[inline]
    pub(crate) fn band(self, j: usize, m_f: usize) -> std::ops::Range<usize> {
        match self {
            Window::Unbounded => 0..m_f,
            Window::Bounded(w) => j.saturating_sub(w)..(j + w + 1).min(m_f),
        }
    }
}

/// Reachable part `[lo, hi]` of one edge, in absolute coordinates along the
/// edge. `lo` may be open (`plus`), `hi` is always closed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeReach<T> {
    pub lo: EpsValue<T>,
    pub hi: T,
}

impl<T: Scalar> EdgeReach<T> {
    pub fn point(x: T) -> Self {
        Self { lo: EpsValue::exact(x), hi: x }
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo.le_value(x) && x <= self.hi
    }

    /// `free ∩ {x ≥ bound}`, or `None` if empty.
    fn clip(free: Option<Interval<T>>, bound: Option<EpsValue<T>>) -> Option<Self> {
        let free = free?;
        let lo = bound?.max(EpsValue::exact(free.lo));
        lo.le_value(free.hi).then_some(Self { lo, hi: free.hi })
    }
}

/// Free intervals of the four edges of one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellFree<T> {
    pub bottom: Option<Interval<T>>,
    pub right: Option<Interval<T>>,
    pub top: Option<Interval<T>>,
    pub left: Option<Interval<T>>,
}

impl<T: Scalar> CellFree<T> {
    pub(crate) fn compute(
        f: &PolygonalCurve<T>,
        g: &PolygonalCurve<T>,
        cell: Cell,
        delta: T,
        norm: NormKind,
    ) -> Self {
        let span = |e| edge_span(f, g, cell, e, delta, norm);
        Self {
            bottom: span(EdgeId::Bottom),
            right: span(EdgeId::Right),
            top: span(EdgeId::Top),
            left: span(EdgeId::Left),
        }
    }

    pub fn get(&self, edge: EdgeId) -> Option<Interval<T>> {
        match edge {
            EdgeId::Bottom => self.bottom,
            EdgeId::Right => self.right,
            EdgeId::Top => self.top,
            EdgeId::Left => self.left,
        }
    }
}

/// Outputs of one cell: reachable right and top edges, and whether the
/// top-right corner `(i+1, j+1)` is reachable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellReach<T> {
    pub right: Option<EdgeReach<T>>,
    pub top: Option<EdgeReach<T>>,
    pub corner: bool,
}

/// Propagates reachability across one cell.
///
/// `left` and `bottom` are the reachable parts of the entry edges, `corner`
/// whether `(i, j)` itself is reachable. Because free space inside a cell is
/// convex, any free exit point that dominates a reachable entry point (weakly
/// in non-bijective mode, strictly in bijective mode) is reachable along a
/// straight segment.
pub fn propagate_cell<T: Scalar>(
    cell: Cell,
    left: Option<EdgeReach<T>>,
    bottom: Option<EdgeReach<T>>,
    corner: bool,
    free: &CellFree<T>,
    mode: Mode,
) -> CellReach<T> {
    let x0 = T::of_usize(cell.i);
    let y0 = T::of_usize(cell.j);
    let x1 = x0 + T::one();
    let y1 = y0 + T::one();
    let (right_bound, top_bound) = match mode {
        Mode::Nonbijective => {
            let from_below = corner || bottom.is_some();
            let from_left = corner || left.is_some();
            let rb = min_bound(left.map(|l| l.lo), from_below.then(|| EpsValue::exact(y0)));
            let tb = min_bound(bottom.map(|b| b.lo), from_left.then(|| EpsValue::exact(x0)));
            (rb, tb)
        }
        Mode::Bijective => {
            // Right edge: from a left point strictly below, or from the
            // corner or any bottom point left of x1, every height above y0.
            // The bottom-right corner point itself is reachable only along
            // the bottom edge; it is the next cell's corner, not part of
            // this right edge's interval (which would wrongly include the
            // heights just above it). The same holds for the top edge and
            // the top-left corner.
            let mut rb = left.map(|l| EpsValue::plus(l.lo.base));
            if corner || bottom.is_some_and(|b| b.lo < EpsValue::exact(x1)) {
                rb = min_bound(rb, Some(EpsValue::plus(y0)));
            }
            let mut tb = bottom.map(|b| EpsValue::plus(b.lo.base));
            if corner || left.is_some_and(|l| l.lo < EpsValue::exact(y1)) {
                tb = min_bound(tb, Some(EpsValue::plus(x0)));
            }
            (rb, tb)
        }
    };
    let right = EdgeReach::clip(free.right, right_bound);
    let top = EdgeReach::clip(free.top, top_bound);
    let corner_next = right.is_some_and(|r| r.hi == y1) || top.is_some_and(|t| t.hi == x1);
    CellReach { right, top, corner: corner_next }
}

fn min_bound<T: Scalar>(a: Option<EpsValue<T>>, b: Option<EpsValue<T>>) -> Option<EpsValue<T>> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Per-cell DP inputs kept for witness extraction, stored band by band.
pub(crate) struct ReachTable<T> {
    rows: Vec<(usize, Vec<CellInputs<T>>)>,
}

#[derive(Clone, Copy)]
struct CellInputs<T> {
    left: Option<EdgeReach<T>>,
    bottom: Option<EdgeReach<T>>,
    corner: bool,
}

impl<T: Scalar> ReachTable<T> {
    pub(crate) fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn get(&self, i: usize, j: usize) -> Option<&CellInputs<T>> {
        let (start, row) = self.rows.get(j)?;
        row.get(i.checked_sub(*start)?)
    }
}

/// Runs the reachability sweep at level `delta` (already including any
/// tolerance). Optionally records the per-cell inputs for backtracking.
#[allow(clippy::too_many_arguments)]
pub(crate) fn sweep<T: Scalar>(
    f: &PolygonalCurve<T>,
    g: &PolygonalCurve<T>,
    norm: NormKind,
    delta: T,
    mode: Mode,
    window: Window,
    mut table: Option<&mut ReachTable<T>>,
) -> bool {
    let (mf, mg) = (f.segments(), g.segments());
    if norm_dist(norm, f.at(0), g.at(0)) > delta || norm_dist(norm, f.at(mf), g.at(mg)) > delta {
        return false;
    }
    if !window.allows(mf - 1, mg - 1) {
        return false;
    }
    let origin = EdgeReach::point(T::zero());
    // Top reach and next-corner flags of the previous and current rows,
    // indexed by column.
    let mut top_prev: Vec<Option<EdgeReach<T>>> = vec![None; mf];
    let mut top_cur: Vec<Option<EdgeReach<T>>> = vec![None; mf];
    let mut corner_prev = vec![false; mf + 1];
    let mut corner_cur = vec![false; mf + 1];
    let mut last = None;

    for j in 0..mg {
        let band = window.band(j, mf);
        let mut record_row = table.as_ref().map(|_| Vec::with_capacity(band.len()));
        let mut left = if band.start == 0 && j == 0 { Some(origin) } else { None };
        for i in band.clone() {
            let cell = Cell::new(i, j);
            let bottom = match (i, j) {
                (0, 0) => Some(origin),
                (_, 0) => None,
                _ if window.allows(i, j - 1) => top_prev[i],
                _ => None,
            };
            let corner = match (i, j) {
                (0, 0) => true,
                (0, _) | (_, 0) => false,
                _ => corner_prev[i],
            };
            let free = CellFree::compute(f, g, cell, delta, norm);
            let out = propagate_cell(cell, left, bottom, corner, &free, mode);
            if let Some(row) = record_row.as_mut() {
                row.push(CellInputs { left, bottom, corner });
            }
            left = out.right;
            top_cur[i] = out.top;
            corner_cur[i + 1] = out.corner;
            if i == mf - 1 && j == mg - 1 {
                last = Some(out);
            }
        }
        if let (Some(t), Some(row)) = (table.as_deref_mut(), record_row) {
            t.rows.push((band.start, row));
        }
        std::mem::swap(&mut top_prev, &mut top_cur);
        std::mem::swap(&mut corner_prev, &mut corner_cur);
    }
    let (xm, ym) = (T::of_usize(mf), T::of_usize(mg));
    last.is_some_and(|out| {
        out.right.is_some_and(|r| r.hi == ym) || out.top.is_some_and(|t| t.hi == xm)
    })
}

/// Backtracks a monotone path from `(m_f, m_g)` to `(0, 0)` through a table
/// recorded by a successful [`sweep`]. Returns breakpoints in forward order.
pub(crate) fn backtrack<T: Scalar>(
    table: &ReachTable<T>,
    mf: usize,
    mg: usize,
    mode: Mode,
) -> Option<Vec<(T, T)>> {
    let strict = mode == Mode::Bijective;
    let mut path = vec![(T::of_usize(mf), T::of_usize(mg))];
    let (mut i, mut j) = (mf - 1, mg - 1);
    let two = T::of(2.0);
    loop {
        let p = *path.last().expect("non-empty");
        if p.0 == T::zero() && p.1 == T::zero() {
            break;
        }
        let x0 = T::of_usize(i);
        let y0 = T::of_usize(j);
        // A point on the bottom or left boundary belongs to the neighbouring
        // cell's top or right edge; continue there without a new breakpoint.
        if strict && p.1 == y0 && j > 0 {
            j -= 1;
            continue;
        }
        if strict && p.0 == x0 && i > 0 {
            i -= 1;
            continue;
        }
        let inputs = table.get(i, j)?;
        let step = if strict {
            strict_predecessor(inputs, p, x0, y0, two)
        } else {
            weak_predecessor(inputs, p, x0, y0)
        }?;
        match step {
            Step::Left(y) => {
                path.push((x0, y));
                if i == 0 {
                    if y != T::zero() {
                        return None;
                    }
                    break;
                }
                i -= 1;
            }
            Step::Bottom(x) => {
                path.push((x, y0));
                if j == 0 {
                    if x != T::zero() {
                        return None;
                    }
                    break;
                }
                j -= 1;
            }
            Step::Corner => {
                path.push((x0, y0));
                if i == 0 || j == 0 {
                    if i != 0 || j != 0 {
                        return None;
                    }
                    break;
                }
                i -= 1;
                j -= 1;
            }
        }
    }
    path.reverse();
    path.dedup();
    Some(path)
}

enum Step<T> {
    Left(T),
    Bottom(T),
    Corner,
}

fn weak_predecessor<T: Scalar>(c: &CellInputs<T>, p: (T, T), x0: T, y0: T) -> Option<Step<T>> {
    if let Some(l) = c.left.filter(|l| l.lo.le_value(p.1)) {
        return Some(Step::Left(p.1.min(l.hi)));
    }
    if let Some(b) = c.bottom.filter(|b| b.lo.le_value(p.0)) {
        return Some(Step::Bottom(p.0.min(b.hi)));
    }
    (c.corner && p.0 >= x0 && p.1 >= y0).then_some(Step::Corner)
}

fn strict_predecessor<T: Scalar>(
    c: &CellInputs<T>,
    p: (T, T),
    x0: T,
    y0: T,
    two: T,
) -> Option<Step<T>> {
    // Choose an entry coordinate in the reachable set and strictly below the
    // exit coordinate: the top of the set if that already is below, else a
    // point between the lower bound and the exit.
    let pick = |r: EdgeReach<T>, bound: T| -> Option<T> {
        if r.hi < bound && r.contains(r.hi) {
            return Some(r.hi);
        }
        if r.lo.base < bound {
            let mid = (r.lo.base + bound) / two;
            if r.contains(mid) && mid < bound {
                return Some(mid);
            }
            if !r.lo.plus {
                return Some(r.lo.base);
            }
        }
        None
    };
    if p.0 > x0 {
        if let Some(y) = c.left.and_then(|l| pick(l, p.1)) {
            return Some(Step::Left(y));
        }
    }
    if p.1 > y0 {
        if let Some(x) = c.bottom.and_then(|b| pick(b, p.0)) {
            return Some(Step::Bottom(x));
        }
    }
    (c.corner && p.0 > x0 && p.1 > y0).then_some(Step::Corner)
}
