//! Lattice presentations of NET maps and their derived combinatorics.

mod dynamics;
mod io;
mod lattice;
mod mirror;
mod random;
mod validate;

pub use dynamics::{OrbifoldType, Portrait, PortraitPoint};
pub use io::{parse, serialize};
pub use lattice::{hermite_lower, smith_diagonal, ClassKey, Lattice};
pub use mirror::{segment_intersection, Mirror, SegmentHit};
pub use random::{random_presentation, RANDOM_RETRY_CAP};
pub use validate::Violation;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{IVec2, RVec2, Slope};

/// One of the four classes `ε = ε₁ε₂` of `Λ₁ / 2Λ₁`, in the order
/// `00, 10, 01, 11`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Corner {
    #[serde(rename = "00")]
    C00,
    #[serde(rename = "10")]
    C10,
    #[serde(rename = "01")]
    C01,
    #[serde(rename = "11")]
    C11,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::C00, Corner::C10, Corner::C01, Corner::C11];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_bits(e1: bool, e2: bool) -> Corner {
        Corner::ALL[(e1 as usize) | ((e2 as usize) << 1)]
    }

    pub fn bits(self) -> (u8, u8) {
        let i = self as u8;
        (i & 1, i >> 1)
    }

    pub fn label(self) -> &'static str {
        ["00", "10", "01", "11"][self.index()]
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Green {
    Trivial,
    /// Far endpoint `z(ε)` of the straight green segment from the corner.
    Far(IVec2),
}

impl Green {
    pub fn far(x: i64, y: i64) -> Green {
        Green::Far(IVec2::new(x, y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub lambda1: IVec2,
    pub lambda2: IVec2,
    pub translation: IVec2,
    /// Indexed by [`Corner::index`].
    pub green: [Green; 4],
}

impl Presentation {
    pub fn new(lambda1: IVec2, lambda2: IVec2, translation: IVec2, green: [Green; 4]) -> Self {
        Presentation { lambda1, lambda2, translation, green }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.lambda1.clone(), self.lambda2.clone())
    }

    pub fn degree(&self) -> BigInt {
        self.lattice().index()
    }

    pub fn elementary_divisors(&self) -> (BigInt, BigInt) {
        self.lattice().elementary_divisors()
    }

    pub fn d_of_slope(&self, s: &Slope) -> BigInt {
        self.lattice().d_of_slope(s)
    }

    pub fn green(&self, e: Corner) -> &Green {
        &self.green[e.index()]
    }

    /// `ε₁λ₁ + ε₂λ₂`.
    pub fn corner(&self, e: Corner) -> IVec2 {
        let (a, b) = e.bits();
        self.lattice().point(&BigInt::from(a), &BigInt::from(b))
    }

    /// Representative of the postcritical point of class `ε`.
    pub fn postcritical_rep(&self, e: Corner) -> IVec2 {
        match self.green(e) {
            Green::Trivial => self.corner(e),
            Green::Far(z) => z.clone(),
        }
    }

    pub fn postcritical_reps(&self) -> [IVec2; 4] {
        Corner::ALL.map(|e| self.postcritical_rep(e))
    }

    /// The base mirror of each nontrivial green segment.
    pub fn base_mirrors(&self) -> Vec<(Corner, Mirror)> {
        Corner::ALL
            .iter()
            .filter_map(|&e| match self.green(e) {
                Green::Trivial => None,
                Green::Far(z) => {
                    let c = self.corner(e);
                    let g = z - &c;
                    Some((e, Mirror::new(c, g)))
                }
            })
            .collect()
    }

    pub fn has_mirrors(&self) -> bool {
        self.green.iter().any(|g| matches!(g, Green::Far(_)))
    }

    /// Every mirror of the `2Λ₁`-periodic family meeting the closed
    /// rectangle `[lo, hi]`, each exactly once.
    pub fn mirror_segments(&self, lo: &RVec2, hi: &RVec2) -> Vec<Mirror> {
        let lat = self.lattice();
        if lat.is_singular() {
            return Vec::new();
        }
        let two = BigInt::from(2);
        let mut out = Vec::new();
        for (_, base) in self.base_mirrors() {
            let reach = base.half.abs();
            let reach = RVec2::new(
                num_rational::BigRational::from_integer(reach.x),
                num_rational::BigRational::from_integer(reach.y),
            );
            let c = base.center.to_rational();
            let l = &(lo - &c) - &reach;
            let h = &(&(hi - &c) + &reach);
            let half = num_rational::BigRational::new(1.into(), 2.into());
            let ((i0, i1), (j0, j1)) = lat.coord_box(&l.scale(&half), &h.scale(&half));
            let mut i = i0;
            while i <= i1 {
                let mut j = j0.clone();
                while j <= j1 {
                    let shift = lat.point(&(&i * &two), &(&j * &two));
                    let m = Mirror::new(&base.center + &shift, base.half.clone());
                    if m.meets_box(lo, hi) {
                        out.push(m);
                    }
                    j += 1;
                }
                i += 1;
            }
        }
        out.sort();
        out
    }

    /// Checks every presentation invariant; empty iff valid.
    pub fn validate(&self) -> Vec<Violation> {
        validate::validate(self)
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidPresentation(v))
        }
    }

    pub fn postcritical_portrait(&self) -> Result<Portrait> {
        dynamics::portrait(self)
    }

    pub fn orbifold_type(&self) -> Result<OrbifoldType> {
        Ok(self.postcritical_portrait()?.orbifold_type())
    }
}

/// The presentation with `λ₁ = (n, 0)`, `λ₂ = (-1, 1)`, `b = (n, 0)`, green
/// segments `(0,0)-(1,0)` and `(n,0)-(2,0)`, other greens trivial.
pub fn family_fn(n: i64) -> Result<Presentation> {
    if n < 4 {
        return Err(Error::BadParameter(format!("family index must be at least 4, got {n}")));
    }
    Ok(Presentation::new(
        IVec2::new(n, 0),
        IVec2::new(-1, 1),
        IVec2::new(n, 0),
        [Green::far(1, 0), Green::far(2, 0), Green::Trivial, Green::Trivial],
    ))
}

/// `Λ₁ = 2Z²` with all greens trivial: the basic Euclidean example.
pub fn euclidean_double() -> Presentation {
    Presentation::new(
        IVec2::new(2, 0),
        IVec2::new(0, 2),
        IVec2::zero(),
        [Green::Trivial, Green::Trivial, Green::Trivial, Green::Trivial],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn f5_basics() {
        let f5 = family_fn(5).unwrap();
        assert_eq!(f5.validate(), vec![]);
        assert_eq!(f5.degree(), BigInt::from(5));
        assert_eq!(f5.elementary_divisors(), (BigInt::from(1), BigInt::from(5)));
        assert_eq!(f5.d_of_slope(&Slope::zero()), BigInt::from(5));
        assert_eq!(family_fn(4).unwrap().degree(), BigInt::from(4));
        assert!(family_fn(3).is_err());
    }

    #[test]
    fn f5_mirrors_in_box() {
        let f5 = family_fn(5).unwrap();
        let lo = RVec2::new(int(-1), int(-1));
        let hi = RVec2::new(int(11), int(1));
        let ms = f5.mirror_segments(&lo, &hi);
        let small = Mirror::new(IVec2::new(0, 0), IVec2::new(1, 0));
        let large = Mirror::new(IVec2::new(5, 0), IVec2::new(-3, 0));
        assert!(ms.contains(&small));
        assert!(ms.contains(&large));
        assert_eq!(small.endpoints(), (IVec2::new(-1, 0), IVec2::new(1, 0)));
        assert_eq!(large.endpoints(), (IVec2::new(2, 0), IVec2::new(8, 0)));
        let mut dedup = ms.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), ms.len());
    }

    #[test]
    fn trivial_greens_have_no_mirrors() {
        let e = euclidean_double();
        let lo = RVec2::new(int(-10), int(-10));
        let hi = RVec2::new(int(10), int(10));
        assert!(e.mirror_segments(&lo, &hi).is_empty());
    }

    #[test]
    fn mirror_family_is_point_symmetric() {
        let f6 = family_fn(6).unwrap();
        let lat = f6.lattice();
        let lo = RVec2::new(int(-30), int(-30));
        let hi = RVec2::new(int(30), int(30));
        let ms = f6.mirror_segments(&lo, &hi);
        let inner = RVec2::new(int(-10), int(-10));
        let inner_hi = RVec2::new(int(10), int(10));
        for lam in [lat.lambda1.clone(), lat.lambda2.clone()] {
            for m in f6.mirror_segments(&inner, &inner_hi) {
                let two = BigInt::from(2);
                let c = &lam.scale(&two) - &m.center;
                let image = Mirror::new(c, -&m.half);
                assert!(ms.contains(&image), "{image:?}");
            }
        }
    }
}
