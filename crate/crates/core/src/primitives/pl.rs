use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The function `λ ↦ |a + b·λ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbsTerm<T> {
    pub a: T,
    pub b: T,
}

impl<T: Scalar> AbsTerm<T> {
    pub fn new(a: T, b: T) -> Self {
        Self { a, b }
    }

    #[inline]
    pub fn eval(&self, lambda: T) -> T {
        (self.a + self.b * lambda).abs()
    }

    /// The zero of `a + bλ`, if the term is not constant.
    fn breakpoint(&self) -> Option<T> {
        (self.b != T::zero()).then(|| -self.a / self.b)
    }
}

/// `λ ↦ max over groups of Σ |a + bλ|` — a convex piecewise-linear function.
#[derive(Debug, Clone, PartialEq)]
pub struct PLObjective<T> {
    groups: Vec<Vec<AbsTerm<T>>>,
}

/// Result of [`pl_convex_minimize`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlMinimum<T> {
    /// The smallest minimizer in the domain.
    pub lambda: T,
    pub value: T,
}

impl<T: Scalar> PLObjective<T> {
    /// Empty groups contribute nothing and are dropped; an objective with no
    /// terms at all is the zero function.
    pub fn new(groups: Vec<Vec<AbsTerm<T>>>) -> Self {
        let groups = groups.into_iter().filter(|g| !g.is_empty()).collect();
        Self { groups }
    }

    pub fn groups(&self) -> &[Vec<AbsTerm<T>>] {
        &self.groups
    }

    pub fn value(&self, lambda: T) -> T {
        self.groups.iter().fold(T::zero(), |acc, g| {
            acc.max(g.iter().fold(T::zero(), |s, t| s + t.eval(lambda)))
        })
    }

    /// Slope and intercept of each group's sum on a piece containing `probe`
    /// in its interior, where every term has a fixed sign.
    fn lines_at(&self, probe: T) -> Vec<(T, T)> {
        self.groups
            .iter()
            .map(|g| {
                g.iter().fold((T::zero(), T::zero()), |(slope, icpt), t| {
                    if t.a + t.b * probe >= T::zero() {
                        (slope + t.b, icpt + t.a)
                    } else {
                        (slope - t.b, icpt - t.a)
                    }
                })
            })
            .collect()
    }
}

/// Exact minimum of a convex piecewise-linear objective over `[lo, hi]`.
///
/// The minimum sits either at a domain endpoint, at a term breakpoint, or
/// where two group sums cross inside a piece between consecutive
/// breakpoints. Breakpoints are scanned to bracket the minimum, then the
/// crossings in the two adjacent pieces are solved exactly.
///
/// ```
/// use skorokhod::{pl_convex_minimize, AbsTerm, PLObjective};
///
/// let obj = PLObjective::new(vec![
///     vec![AbsTerm::new(2.0, -2.0)],
///     vec![AbsTerm::new(0.0, 2.0)],
/// ]);
/// let m = pl_convex_minimize(&obj, 0.0, 1.0).unwrap();
/// assert_eq!((m.lambda, m.value), (0.5, 1.0));
/// ```
pub fn pl_convex_minimize<T: Scalar>(obj: &PLObjective<T>, lo: T, hi: T) -> Result<PlMinimum<T>> {
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::EmptyDomain);
    }
    let mut xs = Vec::with_capacity(2 + obj.groups.iter().map(Vec::len).sum::<usize>());
    xs.push(lo);
    xs.push(hi);
    xs.extend(
        obj.groups
            .iter()
            .flatten()
            .filter_map(AbsTerm::breakpoint)
            .filter(|&x| x > lo && x < hi),
    );
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
    xs.dedup();

    let values: Vec<T> = xs.iter().map(|&x| obj.value(x)).collect();
    let best = values.iter().copied().fold(T::infinity(), T::min);
    let tie = tie_tolerance(best);
    let k = values.iter().position(|&v| v <= best + tie).expect("non-empty");

    let mut cands: Vec<(T, T)> = vec![(xs[k], values[k])];
    let mut scan_piece = |p: T, q: T| {
        let lines = obj.lines_at((p + q) / T::of(2.0));
        for (i, &(s1, c1)) in lines.iter().enumerate() {
            for &(s2, c2) in &lines[i + 1..] {
                if s1 == s2 {
                    continue;
                }
                let x = (c2 - c1) / (s1 - s2);
                if x > p && x < q {
                    cands.push((x, obj.value(x)));
                }
            }
        }
    };
    if k > 0 {
        scan_piece(xs[k - 1], xs[k]);
    }
    if k + 1 < xs.len() {
        scan_piece(xs[k], xs[k + 1]);
    }

    let best = cands.iter().map(|c| c.1).fold(T::infinity(), T::min);
    let tie = tie_tolerance(best);
    let (lambda, value) = cands
        .into_iter()
        .filter(|c| c.1 <= best + tie)
        .fold((T::infinity(), T::infinity()), |acc, c| if c.0 < acc.0 { c } else { acc });
    Ok(PlMinimum { lambda, value: value.min(best).max(T::zero()) })
}

fn tie_tolerance<T: Scalar>(scale: T) -> T {
    T::epsilon() * T::of(1e4) * (T::one() + scale.abs())
}

/// `{λ ∈ [0,1] : Σ |a + bλ| ≤ level}` for a single group, as `(lo, hi)`.
///
/// The sum is convex piecewise linear, so the sublevel set is an interval;
/// its ends are found by evaluating at the sorted breakpoints and solving
/// the linear piece that crosses `level`.
pub(crate) fn pl_sum_sublevel<T: Scalar>(terms: &[AbsTerm<T>], level: T) -> Option<(T, T)> {
    let mut xs: Vec<T> = Vec::with_capacity(terms.len() + 2);
    xs.push(T::zero());
    xs.push(T::one());
    xs.extend(
        terms
            .iter()
            .filter_map(AbsTerm::breakpoint)
            .filter(|&x| x > T::zero() && x < T::one()),
    );
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
    xs.dedup();
    let sum = |x: T| terms.iter().fold(T::zero(), |s, t| s + t.eval(x));
    let vals: Vec<T> = xs.iter().map(|&x| sum(x)).collect();

    // A convex function's sublevel set contains a breakpoint unless it lies
    // strictly inside a single piece — impossible for a piecewise-linear
    // function whose minimum over [0,1] is attained at a breakpoint.
    let first = vals.iter().position(|&v| v <= level)?;
    let last = vals.iter().rposition(|&v| v <= level)?;
    let lo = if first == 0 {
        xs[0]
    } else {
        crossing(xs[first - 1], vals[first - 1], xs[first], vals[first], level)
    };
    let hi = if last + 1 == xs.len() {
        xs[last]
    } else {
        crossing(xs[last], vals[last], xs[last + 1], vals[last + 1], level)
    };
    Some((lo, hi))
}

/// Where the segment from `(x0, v0)` to `(x1, v1)` meets `level`, assuming
/// `level` lies between `v0` and `v1`.
fn crossing<T: Scalar>(x0: T, v0: T, x1: T, v1: T, level: T) -> T {
    if v1 == v0 {
        return x0;
    }
    let t = ((level - v0) / (v1 - v0)).max(T::zero()).min(T::one());
    x0 + t * (x1 - x0)
}
