//! Photon tracing of straight segments through the spin-mirror family.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{fmt_rat, make_slope, ser, IVec2, RVec2, Slope};
use crate::presentation::{segment_intersection, Lattice, Mirror, Presentation, SegmentHit};

/// Start positions tried along a line before giving up.
pub const TRACE_RETRY_CAP: u64 = 64;

/// Denominator of the start-position schedule `τ_j = (seed + j) / 127`.
const TAU_DENOMINATOR: i64 = 127;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    #[serde(serialize_with = "ser::rational")]
    pub t: BigRational,
    #[serde(serialize_with = "ser::display")]
    pub center: IVec2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhotonTrace {
    #[serde(serialize_with = "ser::display")]
    pub start: RVec2,
    #[serde(serialize_with = "ser::display")]
    pub end: RVec2,
    pub crossings: Vec<Crossing>,
    #[serde(serialize_with = "ser::display")]
    pub folded_end: RVec2,
    /// Odd crossing count: the component separates one postcritical point
    /// from the other three.
    pub peripheral: bool,
    /// `Λ₁`-coordinates of `(w' - v) / 2`.
    #[serde(serialize_with = "coords_ser")]
    pub coords: (BigInt, BigInt),
}

fn coords_ser<S: serde::Serializer>(c: &(BigInt, BigInt), s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&format_args!("({},{})", c.0, c.1))
}

impl PhotonTrace {
    pub fn is_trivial(&self) -> bool {
        self.coords.0.is_zero() && self.coords.1.is_zero()
    }

    /// Slope in basis `B` of the folded displacement; `None` when trivial.
    pub fn component_slope(&self) -> Option<Slope> {
        if self.is_trivial() {
            None
        } else {
            Some(make_slope(self.coords.1.clone(), self.coords.0.clone()).unwrap())
        }
    }

    /// One line per crossing, then the folded endpoint summary.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for c in &self.crossings {
            writeln!(s, "t={} center={}", fmt_rat(&c.t), c.center).unwrap();
        }
        let slope = self.component_slope().map_or("trivial".to_string(), |x| x.to_string());
        writeln!(
            s,
            "w'={} coords=({},{}) slope={}",
            self.folded_end, self.coords.0, self.coords.1, slope
        )
        .unwrap();
        s
    }
}

/// Result of `(Σ (-1)^{i+1} c_i)` folding.
pub(crate) fn alternating_sum(centers: &[&IVec2]) -> IVec2 {
    let mut acc = IVec2::zero();
    for (i, c) in centers.iter().enumerate() {
        acc = if i % 2 == 0 { &acc + *c } else { &acc - *c };
    }
    acc
}

/// Mirrors of the family that can meet the segment `[v, v + m u]`, found
/// through a basis of `Λ₁` adapted to the direction `u`.
pub(crate) fn mirrors_near_segment(
    pres: &Presentation,
    lat: &Lattice,
    s: &Slope,
    v: &RVec2,
    m: &BigInt,
) -> Vec<Mirror> {
    let u = s.direction();
    let n = s.normal();
    let d = lat.order_of(&u);
    let a1 = lat.lambda1.dot(&n);
    let a2 = lat.lambda2.dot(&n);
    let e = a1.extended_gcd(&a2);
    let h = e.gcd.clone();
    let mu_star = lat.point(&e.x, &e.y);
    let uu = u.dot(&u);
    let q = |x: BigInt| BigRational::from_integer(x);
    let off = v.dot(&n.to_rational());
    let pv = v.dot(&u.to_rational());
    let span = q(m * &uu);
    let period = q(BigInt::from(2) * &d * &uu);
    let mut out = Vec::new();
    for (_, base) in pres.base_mirrors() {
        let gn = q(base.half.dot(&n).abs());
        let gu = q(base.half.dot(&u).abs());
        let cn = q(base.center.dot(&n));
        let two_h = q(BigInt::from(2) * &h);
        let j0 = ((&off - &gn - &cn) / &two_h).ceil().to_integer();
        let j1 = ((&off + &gn - &cn) / &two_h).floor().to_integer();
        let mut j = j0;
        while j <= j1 {
            let cj = &base.center + &mu_star.scale(&(BigInt::from(2) * &j));
            let pc = q(cj.dot(&u));
            let i0 = ((&pv - &gu - &pc) / &period).ceil().to_integer();
            let i1 = ((&pv + &span + &gu - &pc) / &period).floor().to_integer();
            let mut i = i0;
            while i <= i1 {
                let shift = u.scale(&(BigInt::from(2) * &i * &d));
                out.push(Mirror::new(&cj + &shift, base.half.clone()));
                i += 1;
            }
            j += 1;
        }
    }
    out
}

/// Why a start point was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Blocked {
    StartOnMirror(Mirror),
    ThroughEndpoint(Mirror),
    AlongMirror(Mirror),
    SimultaneousCrossings(BigRational),
}

impl std::fmt::Display for Blocked {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Blocked::StartOnMirror(m) => write!(f, "start point lies on the mirror centered at {}", m.center),
            Blocked::ThroughEndpoint(m) => {
                write!(f, "segment passes through an endpoint of the mirror centered at {}", m.center)
            }
            Blocked::AlongMirror(m) => write!(f, "segment runs along the mirror centered at {}", m.center),
            Blocked::SimultaneousCrossings(t) => write!(f, "two crossings at t={}", fmt_rat(t)),
        }
    }
}

/// Crossings of the open segment `(v, v + m u)` with the mirror family,
/// sorted by parameter.
pub(crate) fn crossings(
    pres: &Presentation,
    lat: &Lattice,
    s: &Slope,
    v: &RVec2,
    m: &BigInt,
) -> std::result::Result<Vec<Crossing>, Blocked> {
    let dir = s.direction().scale(m).to_rational();
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut out = Vec::new();
    for mirror in mirrors_near_segment(pres, lat, s, v, m) {
        match segment_intersection(v, &dir, &mirror) {
            SegmentHit::Miss => {}
            SegmentHit::Collinear { lo, hi } => {
                if hi >= zero && lo <= one {
                    return Err(Blocked::AlongMirror(mirror));
                }
            }
            SegmentHit::Cross { t, s: param } => {
                if t < zero || t > one || param.abs() > one {
                    continue;
                }
                if t == zero || t == one {
                    return Err(Blocked::StartOnMirror(mirror));
                }
                if param.abs() == one {
                    return Err(Blocked::ThroughEndpoint(mirror));
                }
                out.push(Crossing { t, center: mirror.center });
            }
        }
    }
    out.sort_by(|a, b| a.t.cmp(&b.t));
    for w in out.windows(2) {
        if w[0].t == w[1].t {
            return Err(Blocked::SimultaneousCrossings(w[0].t.clone()));
        }
    }
    Ok(out)
}

/// Traces `S = [v, v + 2k(q, p)]` from an explicit start point.
pub fn trace_from(pres: &Presentation, v: &RVec2, s: &Slope, k: u64) -> Result<PhotonTrace> {
    let lat = pres.lattice();
    let kk = BigInt::from(k);
    let d = lat.d_of_slope(s);
    if k == 0 || !(&kk % &d).is_zero() {
        return Err(Error::TraceNotClosed { k });
    }
    let m = BigInt::from(2) * &kk;
    let cs = crossings(pres, &lat, s, v, &m)
        .map_err(|b| Error::NonGenericUnresolvable(b.to_string()))?;
    let w = v + &s.direction().scale(&m).to_rational();
    let centers: Vec<&IVec2> = cs.iter().map(|c| &c.center).collect();
    let two = BigInt::from(2);
    let sum = alternating_sum(&centers).scale(&two).to_rational();
    if cs.len() % 2 == 1 {
        let folded_end = &sum - &w;
        return Ok(PhotonTrace {
            start: v.clone(),
            end: w,
            crossings: cs,
            folded_end,
            peripheral: true,
            coords: (BigInt::zero(), BigInt::zero()),
        });
    }
    let folded_end = &w + &sum;
    let disp = (&folded_end - v).to_integer().expect("folded displacement is integral");
    let half = IVec2::new(&disp.x / &two, &disp.y / &two);
    let coords = match (disp.x.is_even() && disp.y.is_even(), lat.int_coords(&half)) {
        (true, Some(c)) => c,
        _ => {
            return Err(Error::Postcondition(format!(
                "folded displacement {disp} is not in 2Λ₁"
            )))
        }
    };
    Ok(PhotonTrace { start: v.clone(), end: w, crossings: cs, folded_end, peripheral: false, coords })
}

/// Point of the line `<x, N> = o` from the Bezout relation `p a - q b = 1`.
pub fn line_base_point(s: &Slope, o: &BigRational) -> RVec2 {
    let e = s.p().extended_gcd(&-s.q().clone());
    // p e.x + (-q) e.y = 1
    let (a, b) = (e.x, e.y);
    debug_assert!(e.gcd.is_one());
    RVec2::new(o * BigRational::from_integer(a), o * BigRational::from_integer(b))
}

/// Traces the closed line of slope `s` and offset `o` with `k` periods,
/// choosing a generic start point deterministically from `seed`.
pub fn trace_segment(
    pres: &Presentation,
    s: &Slope,
    offset: &BigRational,
    k: u64,
    seed: u64,
) -> Result<PhotonTrace> {
    let o = if offset.is_integer() {
        offset + BigRational::new(BigInt::one(), BigInt::from(2))
    } else {
        offset.clone()
    };
    let base = line_base_point(s, &o);
    let u = s.direction().to_rational();
    let mut last = String::new();
    for j in 0..TRACE_RETRY_CAP {
        let tau = BigRational::new(BigInt::from(seed) + j, BigInt::from(TAU_DENOMINATOR));
        let v = &base + &u.scale(&tau);
        match trace_from(pres, &v, s, k) {
            Err(Error::NonGenericUnresolvable(msg)) => last = msg,
            other => return other,
        }
    }
    Err(Error::NonGenericUnresolvable(format!(
        "slope {s}, offset {}: {last} (after {TRACE_RETRY_CAP} start points)",
        fmt_rat(&o)
    )))
}
