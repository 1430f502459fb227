use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::types::{norm_with, NormKind, Point};

use super::{delta_dagger, pl_convex_minimize, AbsTerm, PLObjective, SegmentParam};

/// Distance from `s` to the segment `[z, z']` and a minimizing parameter.
///
/// ```
/// use skorokhod::{dist_point_segment, NormKind, Point};
///
/// let p = |c: &[f64]| Point::from_slice(c).unwrap();
/// let (d, lambda) =
///     dist_point_segment(&p(&[0.0, 0.0]), &p(&[-1.0, 1.0]), &p(&[1.0, 1.0]), NormKind::L2).unwrap();
/// assert_eq!((d, lambda.value()), (1.0, 0.5));
/// ```
pub fn dist_point_segment<T: Scalar>(
    s: &Point<T>,
    z: &Point<T>,
    z2: &Point<T>,
    norm: NormKind,
) -> Result<(T, SegmentParam<T>)> {
    check_dims(norm, &[s, z, z2])?;
    let (d, lambda) = point_segment_raw(norm, s.coords(), z.coords(), z2.coords());
    Ok((d, SegmentParam::clamped(lambda)))
}

/// Least `δ ≥ 0` such that some point of the segment `[z, z']` lies within
/// `δ` of both `s1` and `s2`.
pub fn min_delta_two_balls_segment<T: Scalar>(
    s1: &Point<T>,
    s2: &Point<T>,
    z: &Point<T>,
    z2: &Point<T>,
    norm: NormKind,
) -> Result<T> {
    check_dims(norm, &[s1, s2, z, z2])?;
    Ok(two_balls_raw(norm, s1.coords(), s2.coords(), z.coords(), z2.coords()))
}

fn check_dims<T: Scalar>(norm: NormKind, points: &[&Point<T>]) -> Result<()> {
    let n = points[0].dim();
    norm.check_dim(n)?;
    if let Some(p) = points.iter().find(|p| p.dim() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
    }
    Ok(())
}

/// Point-segment distance on raw coordinate slices of equal, admissible
/// dimension. Returns `(δ, λ*)`.
pub(crate) fn point_segment_raw<T: Scalar>(norm: NormKind, s: &[T], z: &[T], z2: &[T]) -> (T, T) {
    match norm {
        NormKind::L2 => {
            let lambda = l2_projection(s, z, z2).unwrap_or(T::zero());
            (l2_at(s, z, z2, lambda), lambda)
        }
        NormKind::L2Skoro => l2_skoro_point_segment(s, z, z2),
        _ => {
            let obj = PLObjective::new(point_groups(norm, s, z, z2));
            let m = pl_convex_minimize(&obj, T::zero(), T::one()).expect("unit domain");
            (m.value, m.lambda)
        }
    }
}

pub(crate) fn two_balls_raw<T: Scalar>(norm: NormKind, s1: &[T], s2: &[T], z: &[T], z2: &[T]) -> T {
    match norm {
        NormKind::L2 => l2_two_balls(s1, s2, z, z2),
        NormKind::L2Skoro => l2_skoro_two_balls(s1, s2, z, z2),
        _ => {
            let mut groups = point_groups(norm, s1, z, z2);
            groups.extend(point_groups(norm, s2, z, z2));
            let obj = PLObjective::new(groups);
            pl_convex_minimize(&obj, T::zero(), T::one()).expect("unit domain").value
        }
    }
}

/// Groups of absolute-value terms whose max-of-sums is `‖z − s + λ(z' − z)‖`
/// for the polyhedral norms.
fn point_groups<T: Scalar>(norm: NormKind, s: &[T], z: &[T], z2: &[T]) -> Vec<Vec<AbsTerm<T>>> {
    let term = |k: usize| AbsTerm::new(z[k] - s[k], z2[k] - z[k]);
    let n = s.len();
    match norm {
        NormKind::L1 => vec![(0..n).map(term).collect()],
        NormKind::L1Skoro => vec![(0..n - 1).map(term).collect(), vec![term(n - 1)]],
        NormKind::Linf | NormKind::LinfSkoro => (0..n).map(|k| vec![term(k)]).collect(),
        NormKind::L2 | NormKind::L2Skoro => unreachable!("L2 norms are not polyhedral"),
    }
}

/// `‖z − s + λ(z' − z)‖₂` over the coordinates of `s`.
#[inline]
fn l2_at<T: Scalar>(s: &[T], z: &[T], z2: &[T], lambda: T) -> T {
    norm_with(NormKind::L2, s.len(), |k| z[k] - s[k] + lambda * (z2[k] - z[k]))
}

/// Clamped orthogonal projection parameter of `s` onto `[z, z']`, or `None`
/// for a degenerate segment.
fn l2_projection<T: Scalar>(s: &[T], z: &[T], z2: &[T]) -> Option<T> {
    let (mut num, mut den) = (T::zero(), T::zero());
    for k in 0..s.len() {
        let d = z2[k] - z[k];
        num = num + (s[k] - z[k]) * d;
        den = den + d * d;
    }
    (den > T::zero()).then(|| (num / den).max(T::zero()).min(T::one()))
}

/// Least λ ∈ [0,1] with `|a + bλ| ≤ level`, if any.
fn first_within_abs<T: Scalar>(a: T, b: T, level: T) -> Option<T> {
    if b == T::zero() {
        return (a.abs() <= level).then_some(T::zero());
    }
    let (r1, r2) = ((-level - a) / b, (level - a) / b);
    let (lo, hi) = (r1.min(r2).max(T::zero()), r1.max(r2).min(T::one()));
    (lo <= hi).then_some(lo)
}

/// Distance to a segment under `max(‖value‖₂, |time|)`, time last.
///
/// With `h1` the value distance and `h2` the time distance along the
/// segment: if the time distance at `h1`'s minimizer is dominated, that
/// minimizer is optimal; symmetrically for `h2`; otherwise the optimum is the
/// unique crossing `h1 = h2` between the two minimizers.
fn l2_skoro_point_segment<T: Scalar>(s: &[T], z: &[T], z2: &[T]) -> (T, T) {
    let nv = s.len() - 1;
    let (sv, zv, z2v) = (&s[..nv], &z[..nv], &z2[..nv]);
    let a = z[nv] - s[nv];
    let b = z2[nv] - z[nv];
    let h1 = |l: T| l2_at(sv, zv, z2v, l);
    let h2 = |l: T| (a + b * l).abs();
    let lambda_t = (b != T::zero()).then(|| (-a / b).max(T::zero()).min(T::one()));
    let lambda_p = l2_projection(sv, zv, z2v);

    let (lp, lt) = match (lambda_p, lambda_t) {
        (None, None) => return (h1(T::zero()).max(h2(T::zero())), T::zero()),
        (None, Some(lt)) => {
            // Constant value distance: the optimum level is max(c, min h2),
            // attained first where the time distance drops below it.
            let c = h1(T::zero());
            let level = c.max(h2(lt));
            let lambda = first_within_abs(a, b, level).unwrap_or(lt);
            return (level, lambda);
        }
        (Some(lp), None) => (lp, lp),
        (Some(lp), Some(lt)) => (lp, lt),
    };
    if h2(lp) <= h1(lp) {
        return (h1(lp), lp);
    }
    if h1(lt) <= h2(lt) {
        return (h2(lt), lt);
    }
    // Here h1 − h2 < 0 at lp and > 0 at lt; solve h1² = h2² between them.
    let (lo, hi) = if lp < lt { (lp, lt) } else { (lt, lp) };
    let g = |l: T| h1(l) - h2(l);
    let (mut ww, mut wd, mut dd) = (T::zero(), T::zero(), T::zero());
    for k in 0..nv {
        let w = zv[k] - sv[k];
        let d = z2v[k] - zv[k];
        ww = ww + w * w;
        wd = wd + w * d;
        dd = dd + d * d;
    }
    let qa = dd - b * b;
    let qb = T::of(2.0) * (wd - a * b);
    let qc = ww - a * a;
    let slack = T::epsilon() * T::of(1e3);
    let in_bracket = |r: T| r.is_finite() && r >= lo - slack && r <= hi + slack;
    let roots = solve_quadratic(qa, qb, qc);
    let lambda = roots
        .into_iter()
        .flatten()
        .filter(|&r| in_bracket(r))
        .map(|r| r.max(lo).min(hi))
        .min_by(|x, y| g(*x).abs().partial_cmp(&g(*y).abs()).expect("finite"))
        .unwrap_or_else(|| bisect(g, lp, lt));
    (h1(lambda).max(h2(lambda)), lambda)
}

/// Real roots of `a x² + b x + c = 0`, degrading to the linear case.
fn solve_quadratic<T: Scalar>(a: T, b: T, c: T) -> [Option<T>; 2] {
    let two = T::of(2.0);
    if a == T::zero() {
        return [(b != T::zero()).then(|| -c / b), None];
    }
    let disc = b * b - T::of(4.0) * a * c;
    if disc < T::zero() {
        return [Some(-b / (two * a)), None];
    }
    let sq = disc.sqrt();
    let q = if b >= T::zero() { -(b + sq) / two } else { (sq - b) / two };
    if q == T::zero() {
        return [Some(T::zero()), None];
    }
    [Some(q / a), Some(c / q)]
}

/// Root of `g` between `neg` (where `g < 0`) and `pos` (where `g > 0`).
fn bisect<T: Scalar>(g: impl Fn(T) -> T, mut neg: T, mut pos: T) -> T {
    for _ in 0..200 {
        let mid = (neg + pos) / T::of(2.0);
        if mid == neg || mid == pos {
            break;
        }
        if g(mid) < T::zero() {
            neg = mid;
        } else {
            pos = mid;
        }
    }
    (neg + pos) / T::of(2.0)
}

/// Two-ball radius under L2: if one point's nearest segment point is also
/// close enough to the other, that distance is optimal; otherwise the
/// optimum is the segment point equidistant from both.
fn l2_two_balls<T: Scalar>(s1: &[T], s2: &[T], z: &[T], z2: &[T]) -> T {
    let (Some(l1), Some(l2)) = (l2_projection(s1, z, z2), l2_projection(s2, z, z2)) else {
        return l2_at(s1, z, z2, T::zero()).max(l2_at(s2, z, z2, T::zero()));
    };
    let h1 = |l: T| l2_at(s1, z, z2, l);
    let h2 = |l: T| l2_at(s2, z, z2, l);
    if h2(l1) <= h1(l1) {
        return h1(l1);
    }
    if h1(l2) <= h2(l2) {
        return h2(l2);
    }
    // ‖w1 + λd‖² = ‖w2 + λd‖² is linear in λ.
    let (mut n1, mut n2, mut den) = (T::zero(), T::zero(), T::zero());
    for k in 0..s1.len() {
        let w1 = z[k] - s1[k];
        let w2 = z[k] - s2[k];
        let d = z2[k] - z[k];
        n1 = n1 + w1 * w1;
        n2 = n2 + w2 * w2;
        den = den + d * (w1 - w2);
    }
    let (lo, hi) = if l1 < l2 { (l1, l2) } else { (l2, l1) };
    let lambda = if den != T::zero() {
        ((n2 - n1) / (T::of(2.0) * den)).max(lo).min(hi)
    } else {
        bisect(|l| h1(l) - h2(l), l1, l2)
    };
    h1(lambda).max(h2(lambda))
}

/// Two-ball radius under `max(‖value‖₂, |time|)`.
///
/// Each of the four constraints (value ball around `s1`, value ball around
/// `s2`, time band around `t_s1`, time band around `t_s2`) is an interval of
/// λ that grows with δ. One-dimensional Helly: intervals intersect iff they
/// intersect pairwise, so the answer is the largest of the six pairwise
/// radii.
fn l2_skoro_two_balls<T: Scalar>(s1: &[T], s2: &[T], z: &[T], z2: &[T]) -> T {
    let nv = s1.len() - 1;
    let (t1, t2) = (s1[nv], s2[nv]);
    let (tz, tz2) = (z[nv], z2[nv]);
    let value_pair = l2_two_balls(&s1[..nv], &s2[..nv], &z[..nv], &z2[..nv]);
    let time_pair = if tz == tz2 {
        (tz - t1).abs().max((tz - t2).abs())
    } else {
        delta_dagger(t1, t2, tz, tz2).expect("non-degenerate time segment")
    };
    let mut mixed: Vec<T> = Vec::with_capacity(s1.len());
    let mut lifted = |value: &[T], time: T| {
        mixed.clear();
        mixed.extend_from_slice(value);
        mixed.push(time);
        l2_skoro_point_segment(&mixed, z, z2).0
    };
    let own1 = lifted(&s1[..nv], t1);
    let own2 = lifted(&s2[..nv], t2);
    let cross12 = lifted(&s1[..nv], t2);
    let cross21 = lifted(&s2[..nv], t1);
    value_pair.max(time_pair).max(own1).max(own2).max(cross12).max(cross21)
}
