//! Exact arithmetic: slopes, boundary points, plane vectors, 2x2 matrices.

mod farey;
mod matrix;
mod slope;
mod surd;
mod vec2;

pub use farey::{cusp_of_slope, farey_slopes, slope_of_cusp};
pub use matrix::IntegerMatrix2;
pub use slope::{intersection_multiset, intersection_number, make_slope, ExtendedSlope, Slope};
pub use surd::{boundary_compare, is_square, squarefree_part, BoundaryPoint, QuadNum};
pub use vec2::{IVec2, RVec2};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Formats a rational as `n/d`, always with an explicit denominator.
pub fn fmt_rat(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Serde helpers that write exact numbers as strings.
pub mod ser {
    use std::fmt::Display;

    use num_rational::BigRational;
    use serde::Serializer;

    pub fn display<T: Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_rat(x))
    }

    pub fn opt_display<T: Display, S: Serializer>(x: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }
}
