use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::coverage::{coverage_run, CoverKind};
use super::verdict::fixed_point_search;
use crate::error::Result;
use crate::exact::{cusp_of_slope, Slope};
use crate::presentation::{OrbifoldType, Presentation};
use crate::pullback::{degree_one_self_lift, slope_invariants, SelfLiftWitness};

/// Height used for the consequences of a degree-one self-lift.
pub const OMIT_HEIGHT: u64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Consequence {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmitReport {
    pub slope: Slope,
    pub height: u64,
    pub witness: Option<SelfLiftWitness>,
    /// Both elementary divisors exceed 1, the orbifold is hyperbolic and
    /// `s` is not an obstruction.
    pub strong_hypotheses: bool,
    pub consequences: Vec<Consequence>,
    /// An obstruction `t ≠ s` along with a witness: excluded arcs then omit
    /// a sequence of points accumulating at `cusp(t)`.
    pub accumulating_at: Option<Slope>,
}

impl OmitReport {
    pub fn all_hold(&self) -> bool {
        self.consequences.iter().all(|c| c.holds)
    }
}

/// `2·lcm(1, …, deg)`.
pub fn d_f_constant(deg: u64) -> BigInt {
    let mut l = BigInt::one();
    for k in 1..=deg {
        l = l.lcm(&BigInt::from(k));
    }
    l * 2
}

/// Searches for a degree-one self-lift of the core arcs of slope `s` and
/// checks the predicted consequences up to `height`.
pub fn omit_check(pres: &Presentation, s: &Slope, height: u64) -> Result<OmitReport> {
    pres.ensure_valid()?;
    let witness = degree_one_self_lift(pres, s)?;
    let mut report = OmitReport {
        slope: s.clone(),
        height,
        witness: witness.clone(),
        strong_hypotheses: false,
        consequences: Vec::new(),
        accumulating_at: None,
    };
    if witness.is_none() {
        return Ok(report);
    }
    let one = BigRational::one();
    let fixed = fixed_point_search(pres, height)?;
    let bad: Vec<String> =
        fixed.iter().filter(|f| &f.slope != s && f.c != 1).map(|f| format!("{} (c={})", f.slope, f.c)).collect();
    report.consequences.push(Consequence {
        name: "other fixed slopes have one essential component",
        holds: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} fixed slopes checked", fixed.len())
        } else {
            format!("violated by {}", bad.join(", "))
        },
    });
    report.accumulating_at = fixed.iter().find(|f| &f.slope != s && f.rho >= one).map(|f| f.slope.clone());

    let hyperbolic = pres.orbifold_type()? == OrbifoldType::Hyperbolic;
    if !hyperbolic {
        return Ok(report);
    }
    let cusp = cusp_of_slope(s);
    let cov = coverage_run(pres, height, CoverKind::Obstruction)?;
    let hits: Vec<String> = cov.arcs().filter(|a| a.contains(&cusp)).map(|a| a.to_string()).collect();
    report.consequences.push(Consequence {
        name: "cusp outside every excluded arc",
        holds: hits.is_empty(),
        detail: if hits.is_empty() {
            format!("{} arcs checked", cov.arcs().count())
        } else {
            format!("inside {}", hits.join("; "))
        },
    });

    let (m1, m2) = pres.elementary_divisors();
    let own = slope_invariants(pres, s)?;
    let obstruction = own.is_fixed() && own.rho >= one;
    report.strong_hypotheses = m1 > BigInt::one() && m2 > BigInt::one() && !obstruction;
    if report.strong_hypotheses {
        let closure_hits: Vec<String> =
            cov.arcs().filter(|a| a.closure_contains(&cusp)).map(|a| a.to_string()).collect();
        let obstructions: Vec<String> =
            fixed.iter().filter(|f| f.rho >= one).map(|f| f.slope.to_string()).collect();
        report.consequences.push(Consequence {
            name: "no obstruction and cusp outside every arc closure",
            holds: closure_hits.is_empty() && obstructions.is_empty(),
            detail: match (closure_hits.is_empty(), obstructions.is_empty()) {
                (true, true) => "rational modulo coverage".into(),
                (false, _) => format!("closure of {} contains the cusp", closure_hits.join("; ")),
                (true, false) => format!("obstructions {}", obstructions.join(", ")),
            },
        });
    }
    Ok(report)
}
