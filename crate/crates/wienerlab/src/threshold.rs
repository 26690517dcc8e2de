//! Threshold formulas derived from the keep inequality, the monotonicity
//! lemma, and the large-n bound calculators.
//!
//! Every decision here is made in exact integer arithmetic; the f64-valued
//! threshold functions are display views only. With A(p) = p(3n+2p-7):
//!
//!   keep(t,t,p,n)   <=>  12 (t+p-1)^2   >= A(p)       <=>  t >= f(p,n)
//!   keep(t+1,t,p,n) <=>  3 (2t+2p-1)^2  >= A(p)+3     <=>  t+1 >= g(p,n)
//!
//! where f(p,n) = sqrt(A(p)/12) - p + 1 and g(p,n) = sqrt((A(p)+3)/12) - p + 3/2.

use crate::error::{Error, Result};

fn a_of(p: i128, n: i128) -> i128 {
    p * (3 * n + 2 * p - 7)
}

/// Display view of the equal-leaf-count threshold f(p, n).
pub fn threshold_f(p: usize, n: usize) -> f64 {
    debug_assert!(p >= 2 && n >= 3);
    let a = a_of(p as i128, n as i128) as f64;
    (a / 12.0).sqrt() - p as f64 + 1.0
}

/// Display view of the off-by-one threshold g(p, n).
pub fn threshold_g(p: usize, n: usize) -> f64 {
    debug_assert!(p >= 2 && n >= 3);
    let a = a_of(p as i128, n as i128) as f64;
    ((a + 3.0) / 12.0).sqrt() - p as f64 + 1.5
}

/// Exact form of `t >= threshold_f(p, n)` for integer t >= 1.
pub fn threshold_f_met(t: usize, p: usize, n: usize) -> bool {
    debug_assert!(t >= 1 && p >= 2);
    let (t, p, n) = (t as i128, p as i128, n as i128);
    let q = t + p - 1;
    12 * q * q >= a_of(p, n)
}

/// Exact form of `t >= threshold_g(p, n)` for integer t >= 1.
pub fn threshold_g_met(t: usize, p: usize, n: usize) -> bool {
    debug_assert!(t >= 1 && p >= 2);
    let (t, p, n) = (t as i128, p as i128, n as i128);
    let q = 2 * t + 2 * p - 3;
    3 * q * q >= a_of(p, n) + 3
}

/// Exact form of f(p+1, n) > f(p, n).
///
/// sqrt(a) - sqrt(b) > sqrt(12) holds iff a - b - 12 > 0 and
/// (a - b - 12)^2 > 48 b.
pub fn f_increasing_at(p: usize, n: usize) -> bool {
    debug_assert!(p >= 2);
    let (p, n) = (p as i128, n as i128);
    let b = a_of(p, n);
    let x = a_of(p + 1, n) - b - 12;
    x > 0 && x * x > 48 * b
}

/// Exact form of g(p+1, n) > g(p, n); the +3 offsets cancel in the
/// difference, so only the radicand shifts.
pub fn g_increasing_at(p: usize, n: usize) -> bool {
    debug_assert!(p >= 2);
    let (p, n) = (p as i128, n as i128);
    let b = a_of(p, n) + 3;
    let x = a_of(p + 1, n) - a_of(p, n) - 12;
    x > 0 && x * x > 48 * b
}

/// Upper end of the p-range on which the monotonicity lemma applies:
/// floor(4 sqrt((n-1)/2) - 3), the largest integer p with 3(p+3)^2 <= 8(n-1).
pub fn monotone_p_ceiling(n: usize) -> usize {
    // p <= 4 sqrt((n-1)/2) - 3  <=>  (p+3)^2 <= 16 (n-1)/2  <=>  (p+3)^2 * 2 <= 16(n-1).
    let m = 8 * (n as u64 - 1);
    let mut s = m.isqrt(); // largest s with s^2 <= 8(n-1)
    while (s + 1) * (s + 1) <= m {
        s += 1;
    }
    (s as usize).saturating_sub(3)
}

/// The minimum admissible t1 for a Wiener-maximal tree with n >= 1636, in
/// the two balanced cases: (ceil(sqrt((n-1)/2)) - 1 for t1 = t2,
/// ceil(sqrt((n-1/2)/2) - 1/2) for t1 = t2 + 1).
pub fn okok_bounds(n: usize) -> Result<(i64, i64)> {
    if n < 1636 {
        return Err(Error::BelowHypothesis { n, min: 1636 });
    }
    let m = (n - 1) as u64;
    // ceil(sqrt(m/2)): the smallest k with 2k^2 >= m.
    let mut k = (m / 2).isqrt();
    while 2 * k * k < m {
        k += 1;
    }
    while k > 0 && 2 * (k - 1) * (k - 1) >= m {
        k -= 1;
    }
    let first = k as i64 - 1;
    // ceil(sqrt((2n-1)/4) - 1/2): the smallest k with (2k+1)^2 >= 2n-1.
    let m2 = (2 * n - 1) as u64;
    let mut k2 = (m2.isqrt().saturating_sub(1)) / 2;
    while (2 * k2 + 1) * (2 * k2 + 1) < m2 {
        k2 += 1;
    }
    while k2 > 0 && (2 * (k2 - 1) + 1) * (2 * (k2 - 1) + 1) >= m2 {
        k2 -= 1;
    }
    Ok((first, k2 as i64))
}

/// Lower bound on the off-path vertices contributed by one special vertex's
/// broom pair: ceil(2 sqrt((n-1)/2)) - 2 = ceil(sqrt(2n-2)) - 2.
pub fn offpath_bound(n: usize) -> i64 {
    debug_assert!(n >= 2);
    let m = (2 * n - 2) as u64;
    let mut s = m.isqrt();
    if s * s < m {
        s += 1;
    }
    s as i64 - 2
}

/// The per-p arm bound ceil(2 sqrt(A(p)/12) - p) = ceil(sqrt(A(p)/3)) - p
/// shifted form; `offpath_bound(n)` is its minimum over p >= 2, attained at
/// p = 2.
pub fn offpath_arm_bound(p: usize, n: usize) -> i64 {
    debug_assert!(p >= 2);
    let a = a_of(p as i128, n as i128);
    // smallest s >= 0 with 3 s^2 >= A(p)
    let mut s = ((a / 3) as u64).isqrt() as i128;
    while 3 * s * s < a {
        s += 1;
    }
    while s > 0 && 3 * (s - 1) * (s - 1) >= a {
        s -= 1;
    }
    s as i64 - p as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::keep_inequality;

    #[test]
    fn f_at_p2_is_the_balanced_root() {
        // f(2, n) = sqrt((n-1)/2) - 1 exactly.
        for n in [100usize, 1636, 2048, 9999] {
            let expect = (((n - 1) as f64) / 2.0).sqrt() - 1.0;
            assert!((threshold_f(2, n) - expect).abs() < 1e-9);
        }
        assert!((threshold_f(2, 1636) - 27.592).abs() < 1e-3);
    }

    #[test]
    fn okok_values() {
        assert_eq!(okok_bounds(1636).unwrap(), (28, 29));
        assert_eq!(okok_bounds(2048).unwrap(), (31, 32));
        assert!(matches!(okok_bounds(1635), Err(Error::BelowHypothesis { .. })));
        // Perfect-square edge: n = 2k^2 + 1 makes sqrt((n-1)/2) integral.
        assert_eq!(okok_bounds(2 * 33 * 33 + 1).unwrap().0, 32);
    }

    #[test]
    fn offpath_values() {
        assert_eq!(offpath_bound(1636), 56);
        assert_eq!(offpath_bound(8193), 126);
    }

    #[test]
    fn offpath_arm_minimum_at_p2() {
        for n in [1636usize, 2000, 5000] {
            let base = offpath_arm_bound(2, n);
            assert_eq!(base, offpath_bound(n));
            let mut min = i64::MAX;
            for p in 2..=monotone_p_ceiling(n) {
                min = min.min(offpath_arm_bound(p, n));
            }
            assert_eq!(min, base);
        }
    }

    #[test]
    fn monotone_ceiling_at_1636() {
        // 4 sqrt(817.5) - 3 = 111.37..
        assert_eq!(monotone_p_ceiling(1636), 111);
    }

    #[test]
    fn thresholds_agree_with_keep_inequality() {
        for n in (1636..=2000).step_by(13) {
            for p in 2..=50 {
                for t in 1..=50 {
                    assert_eq!(
                        keep_inequality(t, t, p, n),
                        threshold_f_met(t, p, n),
                        "f mismatch at t={t}, p={p}, n={n}"
                    );
                    assert_eq!(
                        keep_inequality(t + 1, t, p, n),
                        threshold_g_met(t + 1, p, n),
                        "g mismatch at t={t}, p={p}, n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn float_views_agree_away_from_boundaries() {
        for n in [1636usize, 1777, 2000] {
            for p in 2..=40 {
                for t in 1..=40 {
                    let f = threshold_f(p, n);
                    if ((t as f64) - f).abs() > 1e-6 {
                        assert_eq!(threshold_f_met(t, p, n), t as f64 >= f);
                    }
                    let g = threshold_g(p, n);
                    if ((t as f64) - g).abs() > 1e-6 {
                        assert_eq!(threshold_g_met(t, p, n), t as f64 >= g);
                    }
                }
            }
        }
    }
}
