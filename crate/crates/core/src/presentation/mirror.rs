//! Spin mirrors: green segments doubled about their corner.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::{IVec2, RVec2};

/// The segment `[c - g, c + g]`; `g` is stored with a canonical sign so
/// that equal segments compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mirror {
    pub center: IVec2,
    pub half: IVec2,
}

impl Mirror {
    pub fn new(center: IVec2, half: IVec2) -> Mirror {
        let neg = -&half;
        let half = if neg > half { neg } else { half };
        Mirror { center, half }
    }

    pub fn endpoints(&self) -> (IVec2, IVec2) {
        (&self.center - &self.half, &self.center + &self.half)
    }

    /// Integer points on the closed segment, in order from `c - g`.
    pub fn lattice_points(&self) -> Vec<IVec2> {
        let g = num_integer::Integer::gcd(&self.half.x, &self.half.y);
        let step = IVec2::new(&self.half.x / &g, &self.half.y / &g);
        let start = &self.center - &self.half;
        let n: BigInt = &g * 2;
        let mut out = Vec::new();
        let mut k = BigInt::zero();
        while k <= n {
            out.push(&start + &step.scale(&k));
            k += 1;
        }
        out
    }

    pub fn contains_point(&self, x: &RVec2) -> bool {
        let c = self.center.to_rational();
        let g = self.half.to_rational();
        let d = x - &c;
        if !d.cross(&g).is_zero() {
            return false;
        }
        let s = d.dot(&g) / g.dot(&g);
        s.abs() <= BigRational::one()
    }

    /// Whether the closed segment meets the closed rectangle `[lo, hi]`.
    pub fn meets_box(&self, lo: &RVec2, hi: &RVec2) -> bool {
        let (a, b) = self.endpoints();
        clip_segment(&a.to_rational(), &b.to_rational(), lo, hi)
    }

    /// Whether two closed mirrors share a point.
    pub fn meets(&self, other: &Mirror) -> bool {
        let (a, _) = self.endpoints();
        let d = self.half.scale(&BigInt::from(2));
        match segment_intersection(&a.to_rational(), &d.to_rational(), other) {
            SegmentHit::Miss => false,
            SegmentHit::Cross { t, s } => {
                t >= BigRational::zero() && t <= BigRational::one() && s.abs() <= BigRational::one()
            }
            SegmentHit::Collinear { lo, hi } => hi >= BigRational::zero() && lo <= BigRational::one(),
        }
    }
}

impl Serialize for Mirror {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Mirror", 2)?;
        st.serialize_field("center", &self.center.to_string())?;
        st.serialize_field("half", &self.half.to_string())?;
        st.end()
    }
}

/// Intersection of the line `v + t D` with a mirror.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentHit {
    /// Parallel and disjoint lines.
    Miss,
    /// Lines cross at parameter `t` of the segment and `s` of the mirror
    /// (`s ∈ [-1, 1]` on the mirror).
    Cross { t: BigRational, s: BigRational },
    /// Same line; the mirror covers the parameters `lo <= t <= hi`.
    Collinear { lo: BigRational, hi: BigRational },
}

pub fn segment_intersection(v: &RVec2, dir: &RVec2, m: &Mirror) -> SegmentHit {
    let c = m.center.to_rational();
    let g = m.half.to_rational();
    let w = &c - v;
    let den = dir.cross(&g);
    if den.is_zero() {
        if !w.cross(dir).is_zero() {
            return SegmentHit::Miss;
        }
        // collinear: mirror spans parameters (c ± g - v)/D along dir
        let dd = dir.dot(dir);
        let t1 = (&w - &g).dot(dir) / &dd;
        let t2 = (&w + &g).dot(dir) / &dd;
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        return SegmentHit::Collinear { lo, hi };
    }
    let t = w.cross(&g) / &den;
    let s = w.cross(dir) / &den;
    SegmentHit::Cross { t, s }
}

/// Liang-Barsky clipping of the closed segment `[a, b]` against `[lo, hi]`.
fn clip_segment(a: &RVec2, b: &RVec2, lo: &RVec2, hi: &RVec2) -> bool {
    let d = b - a;
    let mut t0 = BigRational::zero();
    let mut t1 = BigRational::one();
    let checks = [
        (-d.x.clone(), &a.x - &lo.x),
        (d.x.clone(), &hi.x - &a.x),
        (-d.y.clone(), &a.y - &lo.y),
        (d.y.clone(), &hi.y - &a.y),
    ];
    for (p, q) in checks {
        if p.is_zero() {
            if q.is_negative() {
                return false;
            }
            continue;
        }
        let r = &q / &p;
        if p.is_negative() {
            if r > t1 {
                return false;
            }
            if r > t0 {
                t0 = r;
            }
        } else {
            if r < t0 {
                return false;
            }
            if r < t1 {
                t1 = r;
            }
        }
    }
    t0 <= t1
}
