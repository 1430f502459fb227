use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Least `δ` such that some time `t` on the segment from `t_z` to `t_z'` is
/// within `δ` of both `t_s1` and `t_s2`.
///
/// In segment parameters `λ_k = (t_sk − t_z)/(t_z' − t_z)` the two time bands
/// are intervals centred at `λ1` and `λ2`. After normalizing so that
/// `0 ≤ λ2` and `λ1 ≤ λ2`, the optimum is at the midpoint of the two centres
/// when that lies on the segment, and otherwise at the nearer endpoint.
///
/// ```
/// use skorokhod::delta_dagger;
///
/// assert!((delta_dagger(0.2f64, 0.8, 0.0, 1.0).unwrap() - 0.3).abs() < 1e-15);
/// assert_eq!(delta_dagger(2.0, 3.0, 0.0, 1.0).unwrap(), 2.0);
/// ```
pub fn delta_dagger<T: Scalar>(t_s1: T, t_s2: T, t_z: T, t_z2: T) -> Result<T> {
    if t_z == t_z2 {
        return Err(Error::DegenerateTimeSegment);
    }
    let span = (t_z2 - t_z).abs();
    let mut l1 = (t_s1 - t_z) / (t_z2 - t_z);
    let mut l2 = (t_s2 - t_z) / (t_z2 - t_z);
    // Normalize: the larger centre first is non-negative and is λ2.
    if l1.max(l2) < T::zero() {
        l1 = T::one() - l1;
        l2 = T::one() - l2;
    }
    if l2 < l1 {
        std::mem::swap(&mut l1, &mut l2);
    }
    let zero = T::zero();
    let one = T::one();
    let half_gap = (l2 - l1) / T::of(2.0);
    let mid = (l1 + l2) / T::of(2.0);
    let lambda_dist = if l1 >= one {
        // Both centres beyond the far end.
        l2 - one
    } else if l2 <= one && l1 >= zero {
        // Both centres on the segment.
        half_gap
    } else if l1 >= zero {
        // λ1 on the segment, λ2 beyond its end.
        if mid <= one {
            half_gap
        } else {
            l2 - one
        }
    } else if l2 <= one {
        // λ1 before the start, λ2 on the segment.
        if mid >= zero {
            half_gap
        } else {
            -l1
        }
    } else {
        // The centres straddle the whole segment.
        if mid < zero {
            -l1
        } else if mid > one {
            l2 - one
        } else {
            half_gap
        }
    };
    Ok(lambda_dist * span)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn documented_examples() {
        assert!(close(delta_dagger(0.2, 0.8, 0.0, 1.0).unwrap(), 0.3));
        assert!(close(delta_dagger(2.0, 3.0, 0.0, 1.0).unwrap(), 2.0));
        assert!(close(delta_dagger(0.0, 2.0, 0.0, 1.0).unwrap(), 1.0));
    }

    #[test]
    fn one_centre_on_segment_other_far_beyond() {
        // Best time is the endpoint 1: max(|1 − 0.9|, |1 − 5|) = 4.
        assert!(close(delta_dagger(0.9, 5.0, 0.0, 1.0).unwrap(), 4.0));
    }

    #[test]
    fn centres_straddling_segment() {
        assert!(close(delta_dagger(-0.1, 5.0, 0.0, 1.0).unwrap(), 4.0));
        assert!(close(delta_dagger(-5.0, 1.1, 0.0, 1.0).unwrap(), 5.0));
        assert!(close(delta_dagger(-1.0, 2.0, 0.0, 1.0).unwrap(), 1.5));
    }

    #[test]
    fn symmetric_under_swaps() {
        let cases = [(0.3, 7.0, 1.0, 2.0), (-4.0, 0.5, 3.0, -1.0), (2.0, 2.5, 0.0, 1.0)];
        for (a, b, z, z2) in cases {
            let d = delta_dagger(a, b, z, z2).unwrap();
            assert!(close(d, delta_dagger(b, a, z, z2).unwrap()));
            assert!(close(d, delta_dagger(a, b, z2, z).unwrap()));
        }
    }

    #[test]
    fn rejects_constant_time_segment() {
        assert_eq!(delta_dagger(0.0, 1.0, 2.0, 2.0), Err(Error::DegenerateTimeSegment));
    }
}
