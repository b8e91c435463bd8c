//! Reduced extended-rational slopes and their intersection pairing.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::IVec2;
use crate::error::{Error, Result};

/// An element of `Q ∪ {∞}` stored as a reduced pair `p/q`.
///
/// The canonical form has `gcd(|p|, q) = 1` and `q >= 0`; infinity is
/// exactly `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slope {
    p: BigInt,
    q: BigInt,
}

impl Slope {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Slope> {
        make_slope(p.into(), q.into())
    }

    pub fn infinity() -> Slope {
        Slope { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn zero() -> Slope {
        Slope { p: BigInt::zero(), q: BigInt::one() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Slope {
        Slope { p: n.into(), q: BigInt::one() }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    /// `max(|p|, q)`.
    pub fn height(&self) -> BigInt {
        self.p.abs().max(self.q.clone())
    }

    /// Primitive direction vector `(q, p)` of lines with this slope.
    pub fn direction(&self) -> IVec2 {
        IVec2::new(self.q.clone(), self.p.clone())
    }

    /// Normal vector `(p, -q)`; the offset of a point `x` is `<x, N>`.
    pub fn normal(&self) -> IVec2 {
        IVec2::new(self.p.clone(), -&self.q)
    }

    pub fn value(&self) -> Option<BigRational> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRational::new(self.p.clone(), self.q.clone()))
        }
    }

    /// Ordering used by slope enumerations: infinity first, then by
    /// height, then by value.
    pub fn farey_cmp(&self, other: &Slope) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => self
                .height()
                .cmp(&other.height())
                .then_with(|| self.cmp(other)),
        }
    }
}

/// Reduces `p/q` to canonical form.
pub fn make_slope(p: BigInt, q: BigInt) -> Result<Slope> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroZero);
    }
    if q.is_zero() {
        return Ok(Slope::infinity());
    }
    let g = p.gcd(&q);
    let (mut p, mut q) = (p / &g, q / &g);
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    Ok(Slope { p, q })
}

/// Orders by value on the extended line, with infinity below every
/// rational.
impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf`/`∞`.
    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::infinity());
        }
        let bad = || Error::Parse { what: "slope", input: s.to_string() };
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => (
                p.trim().parse::<BigInt>().map_err(|_| bad())?,
                q.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        make_slope(p, q)
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Slope, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Either a slope or the nonslope `⊙`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedSlope {
    Slope(Slope),
    NonSlope,
}

impl ExtendedSlope {
    pub fn as_slope(&self) -> Option<&Slope> {
        match self {
            ExtendedSlope::Slope(s) => Some(s),
            ExtendedSlope::NonSlope => None,
        }
    }

    pub fn is_nonslope(&self) -> bool {
        matches!(self, ExtendedSlope::NonSlope)
    }
}

impl fmt::Display for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedSlope::Slope(s) => s.fmt(f),
            ExtendedSlope::NonSlope => write!(f, "nonslope"),
        }
    }
}

impl Serialize for ExtendedSlope {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `ι(p/q, p'/q') = |p q' - p' q|`.
pub fn intersection_number(s: &Slope, t: &Slope) -> BigInt {
    (&s.p * &t.q - &t.p * &s.q).abs()
}

/// Bilinear extension of [`intersection_number`] to weighted multisets.
pub fn intersection_multiset(a: &[(Slope, BigInt)], b: &[(Slope, BigInt)]) -> BigInt {
    let mut total = BigInt::zero();
    for (s, ws) in a {
        for (t, wt) in b {
            total += ws * wt * intersection_number(s, t);
        }
    }
    total
}
