use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{cusp_of_slope, intersection_number, ser, BoundaryPoint, Slope};

/// `B_m(p/q) = {z : Im z / |pz + q|² > m}`, tangent to the boundary at `-q/p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Horoball {
    pub slope: Slope,
    #[serde(serialize_with = "ser::rational")]
    pub scale: BigRational,
}

impl Horoball {
    pub fn new(slope: Slope, scale: BigRational) -> Result<Horoball> {
        if !scale.is_positive() {
            return Err(Error::BadParameter(format!("horoball scale must be positive, got {scale}")));
        }
        Ok(Horoball { slope, scale })
    }

    pub fn base_point(&self) -> BoundaryPoint {
        cusp_of_slope(&self.slope)
    }

    /// Euclidean diameter `1/(m p²)`; `None` for the horizontal horoball at `∞`.
    pub fn diameter(&self) -> Option<BigRational> {
        let p = self.slope.p();
        if p.is_zero() {
            None
        } else {
            Some(BigRational::from_integer(BigInt::from(1)) / (&self.scale * BigRational::from_integer(p * p)))
        }
    }
}

/// Scale `m'` with `B_{m'}(t)` tangent to `B_m(s)`: `m' = 1/(m ι(s,t)²)`.
pub fn tangent_horoball_scale(s: &Slope, t: &Slope, m: &BigRational) -> Result<BigRational> {
    if s == t {
        return Err(Error::EqualSlopes);
    }
    if !m.is_positive() {
        return Err(Error::BadParameter(format!("horoball scale must be positive, got {m}")));
    }
    let i = intersection_number(s, t);
    Ok(BigRational::from_integer(BigInt::from(1)) / (m * BigRational::from_integer(&i * &i)))
}

/// `|tr(P₁ P₂⁻¹)|` for `P_i` the `n_i`-th power of the positive parabolic
/// generator fixing `s_i`.
pub fn parabolic_trace(n1: &BigInt, s1: &Slope, n2: &BigInt, s2: &Slope) -> BigInt {
    let i = intersection_number(s1, s2);
    (BigInt::from(2) + n1 * n2 * &i * &i).abs()
}
