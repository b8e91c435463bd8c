//! Integer and rational plane vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A vector of `Z^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IVec2 {
    pub x: BigInt,
    pub y: BigInt,
}

impl IVec2 {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        IVec2 { x: x.into(), y: y.into() }
    }

    pub fn zero() -> Self {
        IVec2::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &IVec2) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, other: &IVec2) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, k: &BigInt) -> IVec2 {
        IVec2 { x: &self.x * k, y: &self.y * k }
    }

    pub fn to_rational(&self) -> RVec2 {
        RVec2 {
            x: BigRational::from_integer(self.x.clone()),
            y: BigRational::from_integer(self.y.clone()),
        }
    }

    pub fn abs(&self) -> IVec2 {
        IVec2 { x: self.x.abs(), y: self.y.abs() }
    }
}

impl fmt::Display for IVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl<'a> Add<&'a IVec2> for &'a IVec2 {
    type Output = IVec2;
    fn add(self, rhs: &IVec2) -> IVec2 {
        IVec2 { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl<'a> Sub<&'a IVec2> for &'a IVec2 {
    type Output = IVec2;
    fn sub(self, rhs: &IVec2) -> IVec2 {
        IVec2 { x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl Neg for &IVec2 {
    type Output = IVec2;
    fn neg(self) -> IVec2 {
        IVec2 { x: -&self.x, y: -&self.y }
    }
}

/// A vector of `Q^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVec2 {
    pub x: BigRational,
    pub y: BigRational,
}

impl RVec2 {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RVec2 { x, y }
    }

    pub fn zero() -> Self {
        RVec2 { x: BigRational::zero(), y: BigRational::zero() }
    }

    pub fn dot(&self, other: &RVec2) -> BigRational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn cross(&self, other: &RVec2) -> BigRational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, k: &BigRational) -> RVec2 {
        RVec2 { x: &self.x * k, y: &self.y * k }
    }

    /// Returns the integer vector when both coordinates are integral.
    pub fn to_integer(&self) -> Option<IVec2> {
        if self.x.is_integer() && self.y.is_integer() {
            Some(IVec2 { x: self.x.to_integer(), y: self.y.to_integer() })
        } else {
            None
        }
    }
}

impl fmt::Display for RVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", crate::exact::fmt_rat(&self.x), crate::exact::fmt_rat(&self.y))
    }
}

impl<'a> Add<&'a RVec2> for &'a RVec2 {
    type Output = RVec2;
    fn add(self, rhs: &RVec2) -> RVec2 {
        RVec2 { x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl<'a> Sub<&'a RVec2> for &'a RVec2 {
    type Output = RVec2;
    fn sub(self, rhs: &RVec2) -> RVec2 {
        RVec2 { x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl<'a> Mul<&'a BigRational> for &'a RVec2 {
    type Output = RVec2;
    fn mul(self, rhs: &BigRational) -> RVec2 {
        self.scale(rhs)
    }
}

impl Neg for &RVec2 {
    type Output = RVec2;
    fn neg(self) -> RVec2 {
        RVec2 { x: -&self.x, y: -&self.y }
    }
}
