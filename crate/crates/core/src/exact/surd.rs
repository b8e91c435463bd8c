//! Points of the boundary circle `R ∪ {∞}`: rationals, quadratic surds and
//! infinity, with exact comparison.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::fmt_rat;

/// Splits `n > 0` as `k^2 * m` with `m` squarefree; returns `(k, m)`.
pub fn squarefree_part(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree_part needs a positive integer");
    let mut k = BigInt::one();
    let mut m = n.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= m {
        let sq = &f * &f;
        while (&m % &sq).is_zero() {
            m /= &sq;
            k *= &f;
        }
        f += 1;
    }
    (k, m)
}

fn sign_of(x: &BigRational) -> Ordering {
    x.cmp(&BigRational::zero())
}

/// Sign of `u + v*sqrt(r)` for `r >= 0`.
fn sign2(u: &BigRational, v: &BigRational, r: &BigInt) -> Ordering {
    let su = sign_of(u);
    let sv = if r.is_zero() { Ordering::Equal } else { sign_of(v) };
    if sv == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal || su == sv {
        return sv;
    }
    let lhs = u * u;
    let rhs = v * v * BigRational::from_integer(r.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `u + v*sqrt(p) + w*sqrt(q)` for `p, q >= 0`, by squaring with
/// sign tracking.
fn sign3(u: &BigRational, v: &BigRational, p: &BigInt, w: &BigRational, q: &BigInt) -> Ordering {
    let pr = BigRational::from_integer(p.clone());
    let qr = BigRational::from_integer(q.clone());
    let vv = v * v * &pr;
    let ww = w * w * &qr;
    let sv = if p.is_zero() { Ordering::Equal } else { sign_of(v) };
    let sw = if q.is_zero() { Ordering::Equal } else { sign_of(w) };
    let ss = match (sv, sw) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (a, b) if a == b => a,
        _ => match vv.cmp(&ww) {
            Ordering::Greater => sv,
            Ordering::Less => sw,
            Ordering::Equal => Ordering::Equal,
        },
    };
    let su = sign_of(u);
    if ss == Ordering::Equal {
        return su;
    }
    if su == Ordering::Equal || su == ss {
        return ss;
    }
    // |S| vs |u|: S^2 - u^2 = (vv + ww - u^2) + 2vw sqrt(pq)
    let two = BigRational::from_integer(BigInt::from(2));
    match sign2(&(&vv + &ww - u * u), &(two * v * w), &(p * q)) {
        Ordering::Greater => ss,
        Ordering::Less => su,
        Ordering::Equal => Ordering::Equal,
    }
}

/// An element `a + b*sqrt(d)` of a real quadratic field (or of `Q` when
/// `b = 0`, in which case `d` is stored as 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadNum {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> QuadNum {
        if b.is_zero() || d.is_zero() {
            return QuadNum::rational(a);
        }
        let (k, m) = squarefree_part(&d);
        let b = b * BigRational::from_integer(k);
        if m.is_one() {
            QuadNum::rational(a + b)
        } else {
            QuadNum { a, b, d: m }
        }
    }

    pub fn rational(a: BigRational) -> QuadNum {
        QuadNum { a, b: BigRational::zero(), d: BigInt::one() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> QuadNum {
        QuadNum::rational(BigRational::from_integer(n.into()))
    }

    /// Square root of a nonnegative rational.
    pub fn sqrt(r: &BigRational) -> QuadNum {
        assert!(!r.is_negative(), "square root of a negative rational");
        if r.is_zero() {
            return QuadNum::rational(BigRational::zero());
        }
        let num = r.numer() * r.denom();
        let (k, m) = squarefree_part(&num);
        let coef = BigRational::new(k, r.denom().clone());
        if m.is_one() {
            QuadNum::rational(coef)
        } else {
            QuadNum { a: BigRational::zero(), b: coef, d: m }
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        sign2(&self.a, &self.b, &self.d)
    }

    pub fn conj(&self) -> QuadNum {
        QuadNum { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `a^2 - b^2 d`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    fn common_radicand(&self, other: &QuadNum) -> BigInt {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixed quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn inv(&self) -> QuadNum {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        QuadNum::new(&self.a / &n, -&self.b / &n, self.d.clone())
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        sign3(&(&self.a - &other.a), &self.b, &self.d, &-&other.b, &other.d)
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        let d = self.common_radicand(rhs);
        QuadNum::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        let d = self.common_radicand(rhs);
        QuadNum::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        let d = self.common_radicand(rhs);
        let dr = BigRational::from_integer(d.clone());
        QuadNum::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dr,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
}

impl<'a> Div<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn div(self, rhs: &QuadNum) -> QuadNum {
        self * &rhs.inv()
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", fmt_rat(&self.a))
        } else {
            write!(f, "({} + {}*sqrt({}))", fmt_rat(&self.a), fmt_rat(&self.b), self.d)
        }
    }
}

/// A point of the circle `R ∪ {∞}`.
///
/// Comparison treats `∞` as the least element, which turns the circle
/// into a line cut open at `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryPoint {
    Infinity,
    Rational(BigRational),
    /// `a + b*sqrt(d)` with `b != 0` and `d > 1` squarefree.
    Surd(QuadNum),
}

impl BoundaryPoint {
    pub fn real(x: QuadNum) -> BoundaryPoint {
        if x.is_rational() {
            BoundaryPoint::Rational(x.a)
        } else {
            BoundaryPoint::Surd(x)
        }
    }

    pub fn rational(r: BigRational) -> BoundaryPoint {
        BoundaryPoint::Rational(r)
    }

    pub fn surd(a: BigRational, b: BigRational, d: impl Into<BigInt>) -> BoundaryPoint {
        BoundaryPoint::real(QuadNum::new(a, b, d.into()))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn as_quad(&self) -> Option<QuadNum> {
        match self {
            BoundaryPoint::Infinity => None,
            BoundaryPoint::Rational(r) => Some(QuadNum::rational(r.clone())),
            BoundaryPoint::Surd(x) => Some(x.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            BoundaryPoint::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// `None` for `∞`.
    pub fn to_f64(&self) -> Option<f64> {
        self.as_quad().map(|x| x.to_f64())
    }
}

/// Exact comparison of boundary points; `∞` is below every real point.
pub fn boundary_compare(x: &BoundaryPoint, y: &BoundaryPoint) -> Ordering {
    match (x.as_quad(), y.as_quad()) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(a), Some(b)) => a.cmp(&b),
    }
}

impl Ord for BoundaryPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        boundary_compare(self, other)
    }
}

impl PartialOrd for BoundaryPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Infinity => write!(f, "inf"),
            BoundaryPoint::Rational(r) => write!(f, "{}", fmt_rat(r)),
            BoundaryPoint::Surd(x) => x.fmt(f),
        }
    }
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Integer square root check used by tests and callers that want to know
/// whether a radicand is a perfect square.
pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}
