use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{
    cusp_of_slope, intersection_number, ser, BoundaryPoint, ExtendedSlope, IntegerMatrix2, QuadNum, Slope,
};
use crate::pullback::PreimageSummary;

/// The five excluded-interval inequalities, with their parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcKind {
    /// `|px+q|² < ρρ₀|p'x+q'|²`.
    GeneralFixed { rho: BigRational, rho0: BigRational },
    /// `|px+q|² < ρ|p'x+q'|²`.
    Obstruction { rho: BigRational },
    /// `deg·|px+q| < |p'x+q'|`.
    FixedPoint { deg: BigInt },
    /// `d|px+q| < e|p'x+q'|`.
    NetObstruction { d: BigInt, e: BigInt },
    /// `d|px+q| < |p'x+q'|`.
    NetFixedPoint { d: BigInt },
}

impl ArcKind {
    pub fn family(&self) -> ArcFamily {
        match self {
            ArcKind::GeneralFixed { .. } => ArcFamily::GeneralFixed,
            ArcKind::Obstruction { .. } => ArcFamily::Obstruction,
            ArcKind::FixedPoint { .. } => ArcFamily::FixedPoint,
            ArcKind::NetObstruction { .. } => ArcFamily::NetObstruction,
            ArcKind::NetFixedPoint { .. } => ArcFamily::NetFixedPoint,
        }
    }

    /// `(α, β)` with the inequality written as `α(px+q)² < β(p'x+q')²`.
    fn coefficients(&self) -> Result<(BigRational, BigRational)> {
        let q = |n: &BigInt| BigRational::from_integer(n.clone());
        let one = BigRational::one();
        let (a, b) = match self {
            ArcKind::GeneralFixed { rho, rho0 } => (one, rho * rho0),
            ArcKind::Obstruction { rho } => (one, rho.clone()),
            ArcKind::FixedPoint { deg } => (q(&(deg * deg)), one),
            ArcKind::NetObstruction { d, e } => (q(&(d * d)), q(&(e * e))),
            ArcKind::NetFixedPoint { d } => (q(&(d * d)), one),
        };
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::BadParameter(format!("{self} needs positive parameters")));
        }
        Ok((a, b))
    }
}

impl fmt::Display for ArcKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::exact::fmt_rat;
        match self {
            ArcKind::GeneralFixed { rho, rho0 } => {
                write!(f, "GeneralFixed(rho={}, rho0={})", fmt_rat(rho), fmt_rat(rho0))
            }
            ArcKind::Obstruction { rho } => write!(f, "Obstruction(rho={})", fmt_rat(rho)),
            ArcKind::FixedPoint { deg } => write!(f, "FixedPoint(deg={deg})"),
            ArcKind::NetObstruction { d, e } => write!(f, "NetObstruction(d={d}, e={e})"),
            ArcKind::NetFixedPoint { d } => write!(f, "NetFixedPoint(d={d})"),
        }
    }
}

impl Serialize for ArcKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArcFamily {
    GeneralFixed,
    Obstruction,
    FixedPoint,
    NetObstruction,
    NetFixedPoint,
}

/// Open arc `{x : Q(x) < 0}` of the circle `R ∪ {∞}` running in the
/// increasing direction from `lo` to `hi`; it wraps through `∞` when
/// `lo > hi`. `lo == hi` is the circle punctured at that point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryArc {
    pub kind: ArcKind,
    pub slope: Slope,
    pub image: Slope,
    pub lo: BoundaryPoint,
    pub hi: BoundaryPoint,
    #[serde(skip)]
    alpha: BigRational,
    #[serde(skip)]
    beta: BigRational,
}

impl BoundaryArc {
    /// Sign of `Q(x) = α(px+q)² - β(p'x+q')²`, with `Q(∞)` the leading
    /// coefficient.
    pub fn form_sign(&self, x: &BoundaryPoint) -> Ordering {
        let (p, q) = (self.slope.p(), self.slope.q());
        let (p2, q2) = (self.image.p(), self.image.q());
        match x.as_quad() {
            None => {
                let lead = &self.alpha * BigRational::from_integer(p * p)
                    - &self.beta * BigRational::from_integer(p2 * p2);
                lead.cmp(&BigRational::zero())
            }
            Some(x) => {
                let lin = |a: &BigInt, b: &BigInt| {
                    &(&QuadNum::from_int(a.clone()) * &x) + &QuadNum::from_int(b.clone())
                };
                let u = lin(p, q);
                let v = lin(p2, q2);
                let lhs = &QuadNum::rational(self.alpha.clone()) * &(&u * &u);
                let rhs = &QuadNum::rational(self.beta.clone()) * &(&v * &v);
                (&lhs - &rhs).signum()
            }
        }
    }

    /// Membership by evaluating the defining inequality.
    pub fn contains(&self, x: &BoundaryPoint) -> bool {
        self.form_sign(x) == Ordering::Less
    }

    pub fn closure_contains(&self, x: &BoundaryPoint) -> bool {
        self.is_punctured_circle() || self.form_sign(x) != Ordering::Greater
    }

    pub fn is_punctured_circle(&self) -> bool {
        self.lo == self.hi
    }

    /// Membership read off the endpoints.
    pub fn endpoints_contain(&self, x: &BoundaryPoint) -> bool {
        open_arc_contains(&self.lo, &self.hi, x)
    }
}

impl fmt::Display for BoundaryArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}->{}: ({}, {})", self.kind, self.slope, self.image, self.lo, self.hi)
    }
}

/// Whether `x` lies on the open arc from `lo` increasing to `hi`.
pub fn open_arc_contains(lo: &BoundaryPoint, hi: &BoundaryPoint, x: &BoundaryPoint) -> bool {
    match lo.cmp(hi) {
        Ordering::Equal => x != lo,
        Ordering::Less => lo < x && x < hi,
        Ordering::Greater => x > lo || x < hi,
    }
}

/// The excluded arc for a probe `s` with `μ(s) = s'`; `None` when the
/// inequality has no solutions.
pub fn excluded_arc(kind: &ArcKind, s: &Slope, image: &Slope) -> Result<Option<BoundaryArc>> {
    let (alpha, beta) = kind.coefficients()?;
    let qr = |n: &BigInt| BigRational::from_integer(n.clone());
    let (p, q) = (qr(s.p()), qr(s.q()));
    let (p2, q2) = (qr(image.p()), qr(image.q()));
    let iota = intersection_number(s, image);
    let make = |lo: BoundaryPoint, hi: BoundaryPoint| BoundaryArc {
        kind: kind.clone(),
        slope: s.clone(),
        image: image.clone(),
        lo,
        hi,
        alpha: alpha.clone(),
        beta: beta.clone(),
    };
    if iota.is_zero() {
        // Q = (α - β)(px+q)²
        if alpha >= beta {
            return Ok(None);
        }
        let c = cusp_of_slope(s);
        return Ok(Some(make(c.clone(), c)));
    }
    let lead = &alpha * &p * &p - &beta * &p2 * &p2;
    let mid = BigRational::from_integer(BigInt::from(2)) * (&alpha * &p * &q - &beta * &p2 * &q2);
    let cst = &alpha * &q * &q - &beta * &q2 * &q2;
    if lead.is_zero() {
        let root = BoundaryPoint::rational(-cst / &mid);
        return Ok(Some(if mid.is_positive() {
            make(BoundaryPoint::Infinity, root)
        } else {
            make(root, BoundaryPoint::Infinity)
        }));
    }
    // sqrt(disc) = 2 ι sqrt(αβ)
    let root_disc = &QuadNum::sqrt(&(&alpha * &beta)) * &QuadNum::from_int(BigInt::from(2) * &iota);
    let two_lead = QuadNum::rational(BigRational::from_integer(BigInt::from(2)) * &lead);
    let neg_mid = QuadNum::rational(-mid);
    let r1 = BoundaryPoint::real(&(&neg_mid - &root_disc) / &two_lead);
    let r2 = BoundaryPoint::real(&(&neg_mid + &root_disc) / &two_lead);
    let (small, large) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
    Ok(Some(if lead.is_positive() { make(small, large) } else { make(large, small) }))
}

/// Smallest positive divisor `e` of `deg` with `e² ≥ deg`.
pub fn net_divisor(deg: &BigInt) -> BigInt {
    let mut e = deg.sqrt();
    if &(&e * &e) < deg {
        e += 1;
    }
    while !deg.is_multiple_of(&e) {
        e += 1;
    }
    e
}

/// The arc of the given family for an evaluated probe; `None` when `μ(s)`
/// is not a slope or the inequality is empty.
pub fn probe_arc(family: ArcFamily, summary: &PreimageSummary, deg: &BigInt) -> Result<Option<BoundaryArc>> {
    let image = match &summary.mu {
        ExtendedSlope::Slope(t) => t,
        ExtendedSlope::NonSlope => return Ok(None),
    };
    let kind = match family {
        ArcFamily::GeneralFixed => ArcKind::GeneralFixed { rho: summary.rho.clone(), rho0: BigRational::one() },
        ArcFamily::Obstruction => ArcKind::Obstruction { rho: summary.rho.clone() },
        ArcFamily::FixedPoint => ArcKind::FixedPoint { deg: deg.clone() },
        ArcFamily::NetObstruction => ArcKind::NetObstruction { d: summary.d.clone(), e: net_divisor(deg) },
        ArcFamily::NetFixedPoint => ArcKind::NetFixedPoint { d: summary.d.clone() },
    };
    excluded_arc(&kind, &summary.slope, image)
}

/// Center `ξ` and radius `R` of the bounding geodesic after moving `cusp(s')`
/// to `∞` by `M ∈ SL₂(Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelHalfspace {
    #[serde(serialize_with = "ser::display")]
    pub transport: IntegerMatrix2,
    #[serde(serialize_with = "ser::rational")]
    pub center: BigRational,
    #[serde(serialize_with = "ser::display")]
    pub radius: QuadNum,
}

/// In the model where `B_{ρm}(s')` is `{Im z > ρm}`, the horoball `B_m(s)`
/// sits at `ξ` with diameter `1/(m ι²)`; tangency forces `ρm = √ρ/ι`,
/// and the geodesic tangent to both at the tangency point is the
/// semicircle about `ξ` of that radius.
pub fn model_halfspace(s: &Slope, image: &Slope, rho: &BigRational) -> Result<ModelHalfspace> {
    if s == image {
        return Err(Error::EqualSlopes);
    }
    if !rho.is_positive() {
        return Err(Error::BadParameter(format!("multiplier must be positive, got {rho}")));
    }
    let (p2, q2) = (image.p().clone(), image.q().clone());
    // r q' - s₀ p' = 1
    let e = q2.extended_gcd(&(-&p2));
    let (mut r, mut s0) = (e.x, e.y);
    if e.gcd.is_negative() {
        r = -r;
        s0 = -s0;
    }
    let m = IntegerMatrix2::new(r, s0, p2, q2);
    debug_assert!(m.det().is_one());
    let center = match m.act_boundary(&cusp_of_slope(s)) {
        BoundaryPoint::Rational(x) => x,
        other => {
            return Err(Error::Postcondition(format!("transported cusp {other} is not a finite rational")))
        }
    };
    let iota = intersection_number(s, image);
    let radius = &QuadNum::sqrt(rho) / &QuadNum::from_int(iota);
    Ok(ModelHalfspace { transport: m, center, radius })
}

/// The Obstruction arc rebuilt from tangent horoballs: the ideal boundary
/// of the half-space bounded by the geodesic through their tangency point.
pub fn halfspace_geometric_arc(s: &Slope, image: &Slope, rho: &BigRational) -> Result<BoundaryArc> {
    let model = model_halfspace(s, image, rho)?;
    let inv = model.transport.inverse().expect("transport has determinant one");
    let c = QuadNum::rational(model.center.clone());
    let lo = inv.act_boundary(&BoundaryPoint::real(&c - &model.radius));
    let hi = inv.act_boundary(&BoundaryPoint::real(&c + &model.radius));
    let arc = BoundaryArc {
        kind: ArcKind::Obstruction { rho: rho.clone() },
        slope: s.clone(),
        image: image.clone(),
        lo,
        hi,
        alpha: BigRational::one(),
        beta: rho.clone(),
    };
    if !arc.endpoints_contain(&cusp_of_slope(s)) {
        return Err(Error::Postcondition(format!("geometric arc {arc} misses the cusp of {s}")));
    }
    Ok(arc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn sl(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    #[test]
    fn fixed_point_example() {
        let a = excluded_arc(&ArcKind::FixedPoint { deg: 2.into() }, &Slope::infinity(), &Slope::zero())
            .unwrap()
            .unwrap();
        assert_eq!((a.lo.clone(), a.hi.clone()), (BoundaryPoint::rational(rat(-1, 2)), BoundaryPoint::rational(rat(1, 2))));
        assert!(a.contains(&BoundaryPoint::rational(int(0))));
        assert!(!a.contains(&BoundaryPoint::rational(rat(1, 2))));
    }

    #[test]
    fn equal_slopes_net_obstruction_is_empty() {
        let s = sl(3, 5);
        let k = ArcKind::NetObstruction { d: 4.into(), e: 4.into() };
        assert_eq!(excluded_arc(&k, &s, &s).unwrap(), None);
    }

    #[test]
    fn punctured_circle() {
        let s = sl(1, 2);
        let a = excluded_arc(&ArcKind::Obstruction { rho: rat(2, 1) }, &s, &s).unwrap().unwrap();
        assert!(a.is_punctured_circle());
        assert!(!a.contains(&cusp_of_slope(&s)));
        assert!(a.contains(&BoundaryPoint::Infinity));
    }

    #[test]
    fn symmetric_geometric_case() {
        let a = halfspace_geometric_arc(&Slope::infinity(), &Slope::zero(), &int(1)).unwrap();
        assert_eq!(a.lo, BoundaryPoint::rational(int(-1)));
        assert_eq!(a.hi, BoundaryPoint::rational(int(1)));
        let m = model_halfspace(&Slope::infinity(), &Slope::zero(), &rat(3, 1)).unwrap();
        assert_eq!(m.center, int(0));
        assert_eq!(m.radius, QuadNum::sqrt(&rat(3, 1)));
    }

    #[test]
    fn linear_case_through_infinity() {
        // p² = ρ p'²: leading coefficient vanishes
        let a = excluded_arc(&ArcKind::Obstruction { rho: int(4) }, &sl(2, 1), &sl(1, 0)).unwrap().unwrap();
        assert!(a.lo.is_infinite() || a.hi.is_infinite());
        for x in [-7, -1, 0, 1, 3] {
            let x = BoundaryPoint::rational(rat(x, 3));
            assert_eq!(a.contains(&x), a.endpoints_contain(&x));
        }
    }

    #[test]
    fn net_divisor_values() {
        let e: Vec<i64> = (1..=12).map(|n| net_divisor(&BigInt::from(n)).try_into().unwrap()).collect();
        assert_eq!(e, vec![1, 2, 3, 2, 5, 3, 7, 4, 3, 5, 11, 4]);
    }
}
