use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::coverage::{coverage_run, ensure_hyperbolic, residual_of, CoverKind, CoverageState, DirectCheck, ProbeRecord};
use super::arc::{probe_arc, ArcFamily, BoundaryArc};
use crate::error::Result;
use crate::exact::{farey_slopes, ser, slope_of_cusp, BoundaryPoint, Slope};
use crate::presentation::Presentation;
use crate::pullback::{slope_invariants, slope_invariants_many, PreimageSummary};
use super::coverage::ResidualPiece;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedSlope {
    pub slope: Slope,
    #[serde(serialize_with = "ser::rational")]
    pub rho: BigRational,
    pub c: usize,
    #[serde(serialize_with = "ser::display")]
    pub d: BigInt,
}

impl FixedSlope {
    pub fn is_obstruction(&self) -> bool {
        self.rho >= BigRational::one()
    }
}

fn fixed_from(r: &PreimageSummary) -> Option<FixedSlope> {
    r.is_fixed().then(|| FixedSlope { slope: r.slope.clone(), rho: r.rho.clone(), c: r.c, d: r.d.clone() })
}

/// Every `s` of height at most `height` with `μ(s) = s`, in Farey order.
pub fn fixed_point_search(pres: &Presentation, height: u64) -> Result<Vec<FixedSlope>> {
    pres.ensure_valid()?;
    let slopes = farey_slopes(height);
    let mut out = Vec::new();
    for r in slope_invariants_many(pres, &slopes) {
        if let Some(f) = fixed_from(&r?) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Excluded arcs of the given family from every probe of height at most
/// `height`, together with the probes' fixed slopes.
pub fn probe_arcs(pres: &Presentation, height: u64, family: ArcFamily) -> Result<Vec<BoundaryArc>> {
    pres.ensure_valid()?;
    let deg = pres.degree();
    let mut out = Vec::new();
    for r in slope_invariants_many(pres, &farey_slopes(height)) {
        if let Some(a) = probe_arc(family, &r?, &deg)? {
            out.push(a);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Obstructed {
        slope: Slope,
        #[serde(serialize_with = "ser::rational")]
        rho: BigRational,
    },
    CertifiedUnobstructed,
    Inconclusive,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Obstructed { .. } => "Obstructed",
            Verdict::CertifiedUnobstructed => "CertifiedUnobstructed",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

/// Verdict with its certificate: the probe arcs, the residual and the
/// direct checks of residual cusps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub coverage: CoverageState,
}

fn direct_check(pres: &Presentation, at: &BoundaryPoint, probes: &[ProbeRecord]) -> Result<DirectCheck> {
    let Some(t) = slope_of_cusp(at) else {
        return Ok(DirectCheck {
            point: at.clone(),
            slope: None,
            mu: None,
            rho: None,
            certified: true,
            reason: "irrational point is not a cusp".into(),
        });
    };
    let (mu, rho) = match probes.iter().find(|p| p.slope == t) {
        Some(p) => (p.mu.clone(), p.rho.clone()),
        None => {
            let r = slope_invariants(pres, &t)?;
            (r.mu, r.rho)
        }
    };
    let fixed = mu.as_slope() == Some(&t);
    let (certified, reason) = if !fixed {
        (true, format!("mu({t}) = {mu} is not {t}"))
    } else if rho < BigRational::one() {
        (true, format!("fixed with multiplier {} < 1", crate::exact::fmt_rat(&rho)))
    } else {
        (false, format!("fixed with multiplier {} >= 1", crate::exact::fmt_rat(&rho)))
    };
    Ok(DirectCheck { point: at.clone(), slope: Some(t), mu: Some(mu), rho: Some(rho), certified, reason })
}

fn decide(pres: &Presentation, mut coverage: CoverageState) -> Result<VerdictReport> {
    if let Some(p) = coverage.probes.iter().find(|p| p.is_fixed() && p.rho >= BigRational::one()) {
        let verdict = Verdict::Obstructed { slope: p.slope.clone(), rho: p.rho.clone() };
        return Ok(VerdictReport { verdict, coverage });
    }
    if !coverage.is_finite_residual() {
        return Ok(VerdictReport { verdict: Verdict::Inconclusive, coverage });
    }
    let mut checks = Vec::new();
    for piece in &coverage.residual {
        if let ResidualPiece::Point { at } = piece {
            checks.push(direct_check(pres, at, &coverage.probes)?);
        }
    }
    let obstruction = checks
        .iter()
        .find(|c| !c.certified)
        .map(|c| (c.slope.clone().unwrap(), c.rho.clone().unwrap()));
    coverage.certified = checks;
    let verdict = match obstruction {
        Some((slope, rho)) => Verdict::Obstructed { slope, rho },
        None => Verdict::CertifiedUnobstructed,
    };
    Ok(VerdictReport { verdict, coverage })
}

/// Subtracts both obstruction arc families of every probe of height at
/// most `height`, then discharges a finite residual cusp by cusp.
pub fn rationality_verdict(pres: &Presentation, height: u64) -> Result<VerdictReport> {
    rationality_verdict_with(pres, height, CoverKind::Both)
}

/// As [`rationality_verdict`], subtracting only the arcs of `kind`.
pub fn rationality_verdict_with(pres: &Presentation, height: u64, kind: CoverKind) -> Result<VerdictReport> {
    ensure_hyperbolic(pres)?;
    decide(pres, coverage_run(pres, height, kind)?)
}

/// Re-evaluates every probe, arc and direct check listed in `report` and
/// confirms that they reproduce it.
pub fn replay(pres: &Presentation, report: &VerdictReport) -> Result<bool> {
    ensure_hyperbolic(pres)?;
    let cov = &report.coverage;
    let deg = pres.degree();
    let slopes: Vec<Slope> = cov.probes.iter().map(|p| p.slope.clone()).collect();
    if slopes != farey_slopes(cov.height) {
        return Ok(false);
    }
    let mut probes = Vec::with_capacity(slopes.len());
    for r in slope_invariants_many(pres, &slopes) {
        probes.push(ProbeRecord::from_summary(&r?, &deg, cov.kind)?);
    }
    if probes != cov.probes || residual_of(&probes) != cov.residual {
        return Ok(false);
    }
    let fresh = CoverageState {
        kind: cov.kind,
        height: cov.height,
        probes,
        residual: cov.residual.clone(),
        certified: Vec::new(),
    };
    Ok(decide(pres, fresh)? == *report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{euclidean_double, family_fn};

    #[test]
    fn euclidean_everything_fixed() {
        let e = euclidean_double();
        let f = fixed_point_search(&e, 4).unwrap();
        assert_eq!(f.len(), farey_slopes(4).len());
        assert!(f.iter().all(|x| x.rho == BigRational::one()));
        assert_eq!(rationality_verdict(&e, 3), Err(crate::Error::UnsupportedOrbifold));
    }

    #[test]
    fn f5_fixed_points() {
        let f = fixed_point_search(&family_fn(5).unwrap(), 6).unwrap();
        let zero = f.iter().find(|x| x.slope == Slope::zero()).unwrap();
        assert_eq!(zero.rho, crate::exact::rat(1, 5));
        for m in 0..=2 {
            let s = Slope::new(2 * m, 5 - 2 * m - 1).unwrap();
            assert!(f.iter().any(|x| x.slope == s), "{s}");
        }
    }

    #[test]
    fn f4_verdict_replays() {
        let p = family_fn(4).unwrap();
        let r = rationality_verdict(&p, 5).unwrap();
        assert!(!matches!(r.verdict, Verdict::Obstructed { .. }));
        assert!(replay(&p, &r).unwrap());
        let mut forged = r.clone();
        forged.verdict = Verdict::Obstructed { slope: Slope::zero(), rho: BigRational::one() };
        assert!(!replay(&p, &forged).unwrap());
    }
}
