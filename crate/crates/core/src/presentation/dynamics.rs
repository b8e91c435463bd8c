//! The induced self-map of the four postcritical points.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::{Corner, Presentation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrbifoldType {
    Hyperbolic,
    Euclidean,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PortraitPoint {
    pub corner: Corner,
    pub representative: String,
    pub image: Corner,
    pub critical: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Portrait {
    pub points: Vec<PortraitPoint>,
}

impl Portrait {
    pub fn image(&self, e: Corner) -> Corner {
        self.points[e.index()].image
    }

    pub fn fixed(&self) -> Vec<Corner> {
        self.points.iter().filter(|p| p.image == p.corner).map(|p| p.corner).collect()
    }

    pub fn orbifold_type(&self) -> OrbifoldType {
        if self.points.iter().any(|p| p.critical) {
            OrbifoldType::Hyperbolic
        } else {
            OrbifoldType::Euclidean
        }
    }
}

pub(super) fn portrait(pres: &Presentation) -> Result<Portrait> {
    let lat = pres.lattice();
    if lat.is_singular() {
        return Err(Error::InvalidPresentation(pres.validate()));
    }
    let (tb1, tb2) = lat
        .int_coords(&pres.translation)
        .ok_or_else(|| Error::LatticeImageFailure { point: pres.translation.clone() })?;
    let points = Corner::ALL
        .iter()
        .map(|&e| {
            let z = pres.postcritical_rep(e);
            // Λ₁-coordinates of Az + b are z + A⁻¹b
            let k1: BigInt = &z.x + &tb1;
            let k2: BigInt = &z.y + &tb2;
            PortraitPoint {
                corner: e,
                representative: z.to_string(),
                image: Corner::from_bits(k1.is_odd(), k2.is_odd()),
                critical: !lat.contains(&z),
            }
        })
        .collect();
    Ok(Portrait { points })
}
