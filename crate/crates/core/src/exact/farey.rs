//! Slope enumeration and the slope/cusp correspondence.

use num_integer::Integer;
use num_traits::Zero;

use super::{BoundaryPoint, Slope};

/// Every reduced slope of height at most `h`, each once: `∞` first, then by
/// height, then by value.
pub fn farey_slopes(h: u64) -> Vec<Slope> {
    let mut out = vec![Slope::infinity()];
    for k in 1..=h {
        let mut level = Vec::new();
        if k == 1 {
            level.push(Slope::zero());
        }
        // height k: |p| = k with q <= k, or q = k with |p| < k
        for q in 1..=k {
            if q.gcd(&k) == 1 {
                level.push(Slope::new(k, q).unwrap());
                level.push(Slope::new(-(k as i64), q).unwrap());
            }
        }
        for p in 1..k {
            if p.gcd(&k) == 1 {
                level.push(Slope::new(p, k).unwrap());
                level.push(Slope::new(-(p as i64), k).unwrap());
            }
        }
        level.sort();
        level.dedup();
        out.extend(level);
    }
    out
}

/// `p/q -> -q/p`.
pub fn cusp_of_slope(s: &Slope) -> BoundaryPoint {
    if s.p().is_zero() {
        BoundaryPoint::Infinity
    } else {
        BoundaryPoint::Rational(num_rational::BigRational::new(-s.q().clone(), s.p().clone()))
    }
}

/// Inverse of [`cusp_of_slope`] on rational points; `None` for surds.
pub fn slope_of_cusp(x: &BoundaryPoint) -> Option<Slope> {
    match x {
        BoundaryPoint::Infinity => Some(Slope::zero()),
        BoundaryPoint::Rational(r) => {
            if r.is_zero() {
                Some(Slope::infinity())
            } else {
                Some(Slope::new(-r.denom().clone(), r.numer().clone()).unwrap())
            }
        }
        BoundaryPoint::Surd(_) => None,
    }
}
