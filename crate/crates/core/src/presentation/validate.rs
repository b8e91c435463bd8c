use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use super::{Corner, Green, Mirror, Presentation};
use crate::exact::{IVec2, RVec2};

/// A failed presentation invariant with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum Violation {
    SingularLattice,
    TranslationNotInLattice { translation: String },
    GreenEndpointAtCorner { corner: Corner },
    PostcriticalCollision { first: Corner, second: Corner },
    /// A point of `Λ₁` other than the center lies on a mirror.
    MirrorHitsLattice { corner: Corner, point: String },
    /// A postcritical orbit point lies on a mirror away from its ends.
    MirrorHitsPostcritical { corner: Corner, point: String, postcritical: Corner },
    MirrorsIntersect { first: Corner, second: Corner, center: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SingularLattice => write!(f, "SingularLattice: lambda1 and lambda2 are dependent"),
            Violation::TranslationNotInLattice { translation } => {
                write!(f, "TranslationNotInLattice: {translation} is not in the sublattice")
            }
            Violation::GreenEndpointAtCorner { corner } => {
                write!(f, "GreenEndpointAtCorner: green {corner} ends at its own corner")
            }
            Violation::PostcriticalCollision { first, second } => {
                write!(f, "PostcriticalCollision: postcritical points {first} and {second} coincide")
            }
            Violation::MirrorHitsLattice { corner, point } => {
                write!(f, "MirrorHitsLattice: mirror of green {corner} contains corner orbit point {point}")
            }
            Violation::MirrorHitsPostcritical { corner, point, postcritical } => write!(
                f,
                "MirrorHitsPostcritical: mirror of green {corner} contains {point} in the orbit of postcritical point {postcritical}"
            ),
            Violation::MirrorsIntersect { first, second, center } => write!(
                f,
                "MirrorsIntersect: mirror of green {first} meets a translate of mirror {second} centered at {center}"
            ),
        }
    }
}

pub(super) fn validate(pres: &Presentation) -> Vec<Violation> {
    let lat = pres.lattice();
    if lat.is_singular() {
        return vec![Violation::SingularLattice];
    }
    let mut out = Vec::new();
    if !lat.contains(&pres.translation) {
        out.push(Violation::TranslationNotInLattice { translation: pres.translation.to_string() });
    }
    let mut endpoint_ok = true;
    for e in Corner::ALL {
        if let Green::Far(z) = pres.green(e) {
            if *z == pres.corner(e) {
                out.push(Violation::GreenEndpointAtCorner { corner: e });
                endpoint_ok = false;
            }
        }
    }
    if !endpoint_ok {
        return out;
    }
    let reps = pres.postcritical_reps();
    let keys: Vec<_> = reps.iter().map(|r| lat.gamma_key_int(r)).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            if keys[i] == keys[j] {
                out.push(Violation::PostcriticalCollision {
                    first: Corner::ALL[i],
                    second: Corner::ALL[j],
                });
            }
        }
    }
    let bases = pres.base_mirrors();
    for (e, m) in &bases {
        let (a, b) = m.endpoints();
        for x in m.lattice_points() {
            if x == m.center {
                continue;
            }
            if lat.contains(&x) {
                out.push(Violation::MirrorHitsLattice { corner: *e, point: x.to_string() });
                continue;
            }
            if x == a || x == b {
                continue;
            }
            let k = lat.gamma_key_int(&x);
            if let Some(i) = keys.iter().position(|kk| *kk == k) {
                out.push(Violation::MirrorHitsPostcritical {
                    corner: *e,
                    point: x.to_string(),
                    postcritical: Corner::ALL[i],
                });
            }
        }
    }
    for (e, m) in &bases {
        let (lo, hi) = bounding_box(m);
        for other in pres.mirror_segments(&lo, &hi) {
            if other == *m || !m.meets(&other) {
                continue;
            }
            let second = bases
                .iter()
                .find(|(_, b)| b.half == other.half && lat.contains(&(&other.center - &b.center)))
                .map(|(c, _)| *c)
                .unwrap_or(*e);
            out.push(Violation::MirrorsIntersect {
                first: *e,
                second,
                center: other.center.to_string(),
            });
        }
    }
    out
}

fn bounding_box(m: &Mirror) -> (RVec2, RVec2) {
    let r = |v: &IVec2| {
        RVec2::new(BigRational::from_integer(v.x.clone()), BigRational::from_integer(v.y.clone()))
    };
    let c = r(&m.center);
    let h = r(&m.half.abs());
    (&c - &h, &c + &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{euclidean_double, family_fn};

    #[test]
    fn family_is_valid() {
        for n in 4..=12 {
            assert_eq!(family_fn(n).unwrap().validate(), vec![], "n = {n}");
        }
        assert_eq!(euclidean_double().validate(), vec![]);
    }

    #[test]
    fn bad_translation() {
        let mut p = family_fn(5).unwrap();
        p.translation = IVec2::new(1, 0);
        assert_eq!(
            p.validate(),
            vec![Violation::TranslationNotInLattice { translation: "(1,0)".into() }]
        );
    }

    #[test]
    fn singular() {
        let mut p = family_fn(5).unwrap();
        p.lambda2 = p.lambda1.clone();
        assert_eq!(p.validate(), vec![Violation::SingularLattice]);
    }

    #[test]
    fn collisions_and_hits() {
        let mut p = family_fn(5).unwrap();
        // a long green running through λ₁ = (5,0)
        p.green[0] = Green::far(6, 0);
        let v = p.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::MirrorHitsLattice { .. })), "{v:?}");

        let mut q = family_fn(5).unwrap();
        q.green[0] = Green::far(-2, 0);
        // (−2,0) ≡ (2,0) under x -> -x
        let v = q.validate();
        assert!(v.iter().any(|x| matches!(x, Violation::PostcriticalCollision { .. })), "{v:?}");

        let mut r = family_fn(5).unwrap();
        r.green[0] = Green::far(0, 0);
        assert_eq!(r.validate(), vec![Violation::GreenEndpointAtCorner { corner: Corner::C00 }]);
    }

    #[test]
    fn crossing_mirrors() {
        let mut p = family_fn(5).unwrap();
        p.green[2] = Green::far(-1, 0);
        let v = p.validate();
        assert!(!v.is_empty());
    }
}
