//! Integer 2x2 matrices and their linear-fractional action.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{make_slope, BoundaryPoint, QuadNum, Slope};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntegerMatrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        IntegerMatrix2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        IntegerMatrix2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// Adjugate; equals the inverse when `det = 1`.
    pub fn adjugate(&self) -> Self {
        IntegerMatrix2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_one() {
            Some(self.adjugate())
        } else if det == -BigInt::one() {
            let adj = self.adjugate();
            Some(IntegerMatrix2 { a: -adj.a, b: -adj.b, c: -adj.c, d: -adj.d })
        } else {
            None
        }
    }

    /// `[[1, n], [0, 1]]`.
    pub fn parabolic(n: impl Into<BigInt>) -> Self {
        IntegerMatrix2::new(1, n, 0, 1)
    }

    /// Image of the slope `p/q` under the column action on `(p, q)`.
    pub fn act_slope(&self, s: &Slope) -> Slope {
        let p = &self.a * s.p() + &self.b * s.q();
        let q = &self.c * s.p() + &self.d * s.q();
        make_slope(p, q).expect("nonsingular matrix sends a slope to a slope")
    }

    /// Linear-fractional action `x -> (ax + b)/(cx + d)` on the boundary.
    pub fn act_boundary(&self, x: &BoundaryPoint) -> BoundaryPoint {
        let to_q = |n: &BigInt| QuadNum::from_int(n.clone());
        match x.as_quad() {
            None => {
                if self.c.is_zero() {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::real(&to_q(&self.a) / &to_q(&self.c))
                }
            }
            Some(x) => {
                let den = &(&to_q(&self.c) * &x) + &to_q(&self.d);
                if den.is_zero() {
                    return BoundaryPoint::Infinity;
                }
                let num = &(&to_q(&self.a) * &x) + &to_q(&self.b);
                BoundaryPoint::real(&num / &den)
            }
        }
    }
}

impl<'a> Mul<&'a IntegerMatrix2> for &'a IntegerMatrix2 {
    type Output = IntegerMatrix2;
    fn mul(self, r: &IntegerMatrix2) -> IntegerMatrix2 {
        IntegerMatrix2 {
            a: &self.a * &r.a + &self.b * &r.c,
            b: &self.a * &r.b + &self.b * &r.d,
            c: &self.c * &r.a + &self.d * &r.c,
            d: &self.c * &r.b + &self.d * &r.d,
        }
    }
}

impl fmt::Display for IntegerMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, intersection_number, rat};

    #[test]
    fn products_and_inverse() {
        let m = IntegerMatrix2::new(2, 1, 1, 1);
        assert_eq!(m.det(), BigInt::one());
        assert_eq!(&m * &m.inverse().unwrap(), IntegerMatrix2::identity());
        assert_eq!(IntegerMatrix2::new(2, 0, 0, 2).inverse(), None);
    }

    #[test]
    fn action_preserves_intersection() {
        let m = IntegerMatrix2::new(3, 2, 1, 1);
        let s = Slope::new(1, 3).unwrap();
        let t = Slope::new(-1, 1).unwrap();
        assert_eq!(
            intersection_number(&m.act_slope(&s), &m.act_slope(&t)),
            intersection_number(&s, &t)
        );
    }

    #[test]
    fn boundary_action() {
        let m = IntegerMatrix2::new(0, -1, 1, 0);
        assert_eq!(m.act_boundary(&BoundaryPoint::Infinity), BoundaryPoint::Rational(int(0)));
        assert_eq!(m.act_boundary(&BoundaryPoint::Rational(int(0))), BoundaryPoint::Infinity);
        assert_eq!(
            m.act_boundary(&BoundaryPoint::Rational(int(2))),
            BoundaryPoint::Rational(rat(-1, 2))
        );
        let x = BoundaryPoint::surd(int(0), int(1), 2);
        assert_eq!(m.act_boundary(&x), BoundaryPoint::surd(int(0), rat(-1, 2), 2));
    }
}
