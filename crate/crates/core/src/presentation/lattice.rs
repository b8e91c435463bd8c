//! The sublattice `Λ₁ ⊆ Z²` spanned by the presentation basis.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exact::{IVec2, RVec2, Slope};

/// Canonical key of a point modulo `2Λ₁`: its `Λ₁`-coordinates reduced
/// into `[0, 2)`.
pub type ClassKey = (BigRational, BigRational);

/// `Λ₁ = Zλ₁ + Zλ₂` with coordinate maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub lambda1: IVec2,
    pub lambda2: IVec2,
    det: BigInt,
}

fn mod2(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    x - &two * (x / &two).floor()
}

impl Lattice {
    pub fn new(lambda1: IVec2, lambda2: IVec2) -> Lattice {
        let det = lambda1.cross(&lambda2);
        Lattice { lambda1, lambda2, det }
    }

    /// `det[λ₁ λ₂]`, signed.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn index(&self) -> BigInt {
        self.det.abs()
    }

    pub fn is_singular(&self) -> bool {
        self.det.is_zero()
    }

    /// `a λ₁ + b λ₂`.
    pub fn point(&self, a: &BigInt, b: &BigInt) -> IVec2 {
        &self.lambda1.scale(a) + &self.lambda2.scale(b)
    }

    pub fn rpoint(&self, a: &BigRational, b: &BigRational) -> RVec2 {
        &self.lambda1.to_rational().scale(a) + &self.lambda2.to_rational().scale(b)
    }

    /// `adj(A) x`, so that `A⁻¹ x = adj(A) x / det`.
    pub fn adj_apply(&self, x: &IVec2) -> IVec2 {
        let (l1, l2) = (&self.lambda1, &self.lambda2);
        IVec2::new(&l2.y * &x.x - &l2.x * &x.y, -&l1.y * &x.x + &l1.x * &x.y)
    }

    /// `Λ₁`-coordinates of a rational point.
    pub fn coords(&self, x: &RVec2) -> RVec2 {
        let det = BigRational::from_integer(self.det.clone());
        let (l1, l2) = (self.lambda1.to_rational(), self.lambda2.to_rational());
        RVec2::new(
            (&l2.y * &x.x - &l2.x * &x.y) / &det,
            (-&l1.y * &x.x + &l1.x * &x.y) / &det,
        )
    }

    /// Integer `Λ₁`-coordinates when `x ∈ Λ₁`.
    pub fn int_coords(&self, x: &IVec2) -> Option<(BigInt, BigInt)> {
        let u = self.adj_apply(x);
        if (&u.x % &self.det).is_zero() && (&u.y % &self.det).is_zero() {
            Some((&u.x / &self.det, &u.y / &self.det))
        } else {
            None
        }
    }

    pub fn contains(&self, x: &IVec2) -> bool {
        self.int_coords(x).is_some()
    }

    pub fn contains_rational(&self, x: &RVec2) -> bool {
        let c = self.coords(x);
        c.x.is_integer() && c.y.is_integer()
    }

    /// Class of `x` modulo `2Λ₁`.
    pub fn key_mod2(&self, x: &RVec2) -> ClassKey {
        let c = self.coords(x);
        (mod2(&c.x), mod2(&c.y))
    }

    /// Class of `x` modulo `Γ₁ = {y -> 2λ ± y}`.
    pub fn gamma_key(&self, x: &RVec2) -> ClassKey {
        let a = self.key_mod2(x);
        let b = self.key_mod2(&-x);
        a.min(b)
    }

    pub fn gamma_key_int(&self, x: &IVec2) -> ClassKey {
        self.gamma_key(&x.to_rational())
    }

    /// Representative of the `2Λ₁` class given by a key.
    pub fn from_key(&self, k: &ClassKey) -> RVec2 {
        self.rpoint(&k.0, &k.1)
    }

    pub fn gamma_equivalent(&self, x: &RVec2, y: &RVec2) -> bool {
        self.gamma_key(x) == self.gamma_key(y)
    }

    /// Least `k >= 1` with `k (q, p) ∈ Λ₁`.
    pub fn order_of(&self, v: &IVec2) -> BigInt {
        let u = self.adj_apply(v);
        let det = self.det.abs();
        let g = det.gcd(&u.x).gcd(&u.y);
        det / g
    }

    pub fn d_of_slope(&self, s: &Slope) -> BigInt {
        self.order_of(&s.direction())
    }

    /// Diagonal `(m₁, m₂)` of the Smith normal form of `[λ₁ λ₂]`.
    pub fn elementary_divisors(&self) -> (BigInt, BigInt) {
        smith_diagonal([
            [self.lambda1.x.clone(), self.lambda2.x.clone()],
            [self.lambda1.y.clone(), self.lambda2.y.clone()],
        ])
    }

    /// Lower-triangular basis `(h11, h21), (0, h22)` of `2Λ₁`, with
    /// `h11, h22 > 0`; the points `(x, y)` with `0 <= x < h11`,
    /// `0 <= y < h22` represent `Z²/2Λ₁` exactly once each.
    pub fn hermite_double(&self) -> (BigInt, BigInt, BigInt) {
        let two = BigInt::from(2);
        hermite_lower(&self.lambda1.scale(&two), &self.lambda2.scale(&two))
    }

    /// Coset representatives of `Z²/2Λ₁`.
    pub fn cosets_mod_double(&self) -> Vec<IVec2> {
        let (h11, _h21, h22) = self.hermite_double();
        let mut out = Vec::new();
        let mut x = BigInt::zero();
        while x < h11 {
            let mut y = BigInt::zero();
            while y < h22 {
                out.push(IVec2::new(x.clone(), y.clone()));
                y += 1;
            }
            x += 1;
        }
        out
    }

    /// Range of integer `Λ₁`-coordinates `κ` with `A κ` inside the given
    /// rational rectangle, as inclusive bounds.
    pub fn coord_box(
        &self,
        lo: &RVec2,
        hi: &RVec2,
    ) -> ((BigInt, BigInt), (BigInt, BigInt)) {
        let corners = [
            RVec2::new(lo.x.clone(), lo.y.clone()),
            RVec2::new(hi.x.clone(), lo.y.clone()),
            RVec2::new(lo.x.clone(), hi.y.clone()),
            RVec2::new(hi.x.clone(), hi.y.clone()),
        ];
        let cs: Vec<RVec2> = corners.iter().map(|c| self.coords(c)).collect();
        let min_x = cs.iter().map(|c| c.x.clone()).min().unwrap();
        let max_x = cs.iter().map(|c| c.x.clone()).max().unwrap();
        let min_y = cs.iter().map(|c| c.y.clone()).min().unwrap();
        let max_y = cs.iter().map(|c| c.y.clone()).max().unwrap();
        (
            (min_x.ceil().to_integer(), max_x.floor().to_integer()),
            (min_y.ceil().to_integer(), max_y.floor().to_integer()),
        )
    }
}

/// Column Hermite form of the lattice spanned by `v1, v2`.
pub fn hermite_lower(v1: &IVec2, v2: &IVec2) -> (BigInt, BigInt, BigInt) {
    let e = v1.x.extended_gcd(&v2.x);
    let g = e.gcd.clone();
    assert!(!g.is_zero(), "degenerate lattice");
    let w1 = &v1.scale(&e.x) + &v2.scale(&e.y);
    let w2 = &v1.scale(&(&v2.x / &g)) - &v2.scale(&(&v1.x / &g));
    let (mut h11, mut h21) = (w1.x, w1.y);
    let h22 = w2.y.abs();
    assert!(!h22.is_zero(), "degenerate lattice");
    if h11.is_negative() {
        h11 = -h11;
        h21 = -h21;
    }
    h21 = h21.mod_floor(&h22);
    (h11, h21, h22)
}

/// Smith normal form diagonal of a 2x2 integer matrix by elementary row
/// and column operations.
pub fn smith_diagonal(m: [[BigInt; 2]; 2]) -> (BigInt, BigInt) {
    let mut m = m;
    loop {
        // move a nonzero entry of least magnitude to (0,0)
        let mut best: Option<(usize, usize)> = None;
        for i in 0..2 {
            for j in 0..2 {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else {
            return (BigInt::zero(), BigInt::zero());
        };
        m.swap(0, i);
        for row in m.iter_mut() {
            row.swap(0, j);
        }
        let p = m[0][0].clone();
        let mut changed = false;
        // clear first column and first row
        let q = m[1][0].div_floor(&p);
        if !q.is_zero() {
            let r0 = m[0].clone();
            for k in 0..2 {
                m[1][k] -= &q * &r0[k];
            }
            changed = true;
        }
        let q = m[0][1].div_floor(&p);
        if !q.is_zero() {
            for row in m.iter_mut() {
                let c0 = row[0].clone();
                row[1] -= &q * c0;
            }
            changed = true;
        }
        if !m[1][0].is_zero() || !m[0][1].is_zero() {
            if !changed {
                unreachable!("remainder step always makes progress");
            }
            continue;
        }
        // diagonal; enforce divisibility
        if !(&m[1][1] % &p).is_zero() {
            let r1 = m[1].clone();
            for k in 0..2 {
                m[0][k] += &r1[k];
            }
            continue;
        }
        let a = m[0][0].abs();
        let b = m[1][1].abs();
        return if a <= b || b.is_zero() { (a, b) } else { (b, a) };
    }
}

impl Lattice {
    pub fn unit() -> Lattice {
        Lattice::new(IVec2::new(1, 0), IVec2::new(0, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use num_traits::One;

    fn lat(a: i64, b: i64, c: i64, d: i64) -> Lattice {
        Lattice::new(IVec2::new(a, b), IVec2::new(c, d))
    }

    fn gcd_oracle(a: i64, b: i64, c: i64, d: i64) -> (i64, i64) {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        let det = (a * d - b * c).abs();
        if g == 0 {
            (0, 0)
        } else {
            (g, det / g)
        }
    }

    #[test]
    fn smith_examples() {
        let f5 = lat(5, 0, -1, 1);
        assert_eq!(f5.elementary_divisors(), (BigInt::from(1), BigInt::from(5)));
        let two = lat(2, 0, 0, 2);
        assert_eq!(two.elementary_divisors(), (BigInt::from(2), BigInt::from(2)));
        assert_eq!(Lattice::unit().elementary_divisors(), (BigInt::one(), BigInt::one()));
    }

    #[test]
    fn smith_matches_gcd_oracle() {
        for a in -4..=4 {
            for b in -4..=4 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        if a * d - b * c == 0 {
                            continue;
                        }
                        let (m1, m2) = lat(a, b, c, d).elementary_divisors();
                        let (o1, o2) = gcd_oracle(a, b, c, d);
                        assert_eq!((m1, m2), (BigInt::from(o1), BigInt::from(o2)));
                    }
                }
            }
        }
    }

    #[test]
    fn membership_and_order() {
        let f5 = lat(5, 0, -1, 1);
        assert!(!f5.contains(&IVec2::new(1, 0)));
        assert!(f5.contains(&IVec2::new(4, 1)));
        assert_eq!(f5.d_of_slope(&Slope::zero()), BigInt::from(5));
        assert_eq!(f5.d_of_slope(&Slope::infinity()), BigInt::from(5));
        assert_eq!(Lattice::unit().d_of_slope(&Slope::new(3, 7).unwrap()), BigInt::one());
    }

    #[test]
    fn cosets_of_double_lattice() {
        let f5 = lat(5, 0, -1, 1);
        let reps = f5.cosets_mod_double();
        assert_eq!(reps.len(), 20);
        let mut keys: Vec<_> = reps.iter().map(|r| f5.key_mod2(&r.to_rational())).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 20);
    }

    #[test]
    fn gamma_classes_count() {
        // Z² modulo Γ₁ has 2·deg + 2 classes
        for l in [lat(5, 0, -1, 1), lat(2, 0, 0, 2), lat(3, 1, 1, 2)] {
            let mut keys: Vec<_> =
                l.cosets_mod_double().iter().map(|r| l.gamma_key_int(r)).collect();
            keys.sort();
            keys.dedup();
            assert_eq!(BigInt::from(keys.len()), l.index() * 2 + 2);
        }
    }
}
