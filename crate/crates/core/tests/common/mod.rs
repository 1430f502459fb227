//! Random instance generators shared by the integration suites.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skorokhod::{lift_trace, validate_trace, NormKind, Point, PolygonalCurve, SampledTrace};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn coords(rng: &mut StdRng, n: usize, range: f64) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-range..range)).collect()
}

pub fn point(rng: &mut StdRng, n: usize) -> Point<f64> {
    Point::new(coords(rng, n, 10.0)).unwrap()
}

/// A curve with `m` segments and coordinates in `[-10, 10]`.
pub fn curve(rng: &mut StdRng, m: usize, n: usize) -> PolygonalCurve<f64> {
    PolygonalCurve::from_coords((0..=m).map(|_| coords(rng, n, 10.0)).collect()).unwrap()
}

/// A trace with `m` segments, values in `[-10, 10]^n` and random positive
/// time steps.
pub fn trace(rng: &mut StdRng, m: usize, n: usize) -> SampledTrace<f64> {
    let mut t = rng.gen_range(0.0..1.0);
    let raw = (0..=m)
        .map(|_| {
            let s = (t, coords(rng, n, 10.0));
            t += rng.gen_range(0.1..3.0);
            s
        })
        .collect();
    validate_trace(raw).unwrap()
}

/// A random curve suited to `norm`: a lifted trace (value dimension `n`)
/// for skoro norms, a plain curve in `R^n` otherwise.
pub fn curve_for(rng: &mut StdRng, norm: NormKind, m: usize, n: usize) -> PolygonalCurve<f64> {
    if norm.is_skoro() {
        lift_trace(&trace(rng, m, n))
    } else {
        curve(rng, m, n)
    }
}

/// Largest pointwise distance along a piecewise-linear parameter path.
pub fn path_cost(
    f: &PolygonalCurve<f64>,
    g: &PolygonalCurve<f64>,
    norm: NormKind,
    path: &[(f64, f64)],
    samples: usize,
) -> f64 {
    let mut worst: f64 = 0.0;
    for w in path.windows(2) {
        for k in 0..=samples {
            let t = k as f64 / samples as f64;
            let rf = (w[0].0 + t * (w[1].0 - w[0].0)).min(f.segments() as f64);
            let rg = (w[0].1 + t * (w[1].1 - w[0].1)).min(g.segments() as f64);
            let a = skorokhod::curve_point(f, rf).unwrap();
            let b = skorokhod::curve_point(g, rg).unwrap();
            let diff: Vec<f64> = a.coords().iter().zip(b.coords()).map(|(x, y)| x - y).collect();
            worst = worst.max(skorokhod::norm_eval(norm, &diff).unwrap());
        }
    }
    worst
}
