//! Equators of NET maps and the formal matings of the family `f_n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{farey_slopes, make_slope, ser, Slope};
use crate::presentation::{family_fn, Corner, Presentation};
use crate::pullback::{slope_invariants, slope_invariants_many, PreimageSummary};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquatorConditions {
    /// `d(s)` equals the degree: the preimage is a single curve.
    pub full_degree: bool,
    /// `μ(s) = s`.
    pub fixed: bool,
    /// Some postcritical point is fixed, which settles orientation.
    pub postcritical_fixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquatorReport {
    pub slope: Slope,
    pub conditions: EquatorConditions,
    pub equator: bool,
    /// `"fixed postcritical point"` or `"undetermined"`.
    pub orientation: &'static str,
    #[serde(serialize_with = "ser::display")]
    pub d: BigInt,
    #[serde(serialize_with = "ser::rational")]
    pub rho: BigRational,
}

fn report(summary: &PreimageSummary, deg: &BigInt, postcritical_fixed: bool) -> EquatorReport {
    let conditions = EquatorConditions {
        full_degree: &summary.d == deg,
        fixed: summary.is_fixed(),
        postcritical_fixed,
    };
    EquatorReport {
        slope: summary.slope.clone(),
        equator: conditions.full_degree && conditions.fixed && conditions.postcritical_fixed,
        conditions,
        orientation: if postcritical_fixed { "fixed postcritical point" } else { "undetermined" },
        d: summary.d.clone(),
        rho: summary.rho.clone(),
    }
}

/// Condition vectors for every slope of height at most `height`.
pub fn equator_conditions(pres: &Presentation, height: u64) -> Result<Vec<EquatorReport>> {
    pres.ensure_valid()?;
    let deg = pres.degree();
    let pf_fixed = !pres.postcritical_portrait()?.fixed().is_empty();
    let slopes = farey_slopes(height);
    let mut out = Vec::with_capacity(slopes.len());
    for r in slope_invariants_many(pres, &slopes) {
        out.push(report(&r?, &deg, pf_fixed));
    }
    Ok(out)
}

/// The slopes of height at most `height` passing all three conditions.
pub fn find_equators(pres: &Presentation, height: u64) -> Result<Vec<EquatorReport>> {
    Ok(equator_conditions(pres, height)?.into_iter().filter(|r| r.equator).collect())
}

/// `2m/(n-2m-1)` for `0 ≤ m ≤ ⌈(n-2)/2⌉`, reduced.
pub fn family_equator_slopes(n: i64) -> Result<Vec<Slope>> {
    if n < 4 {
        return Err(Error::BadParameter(format!("family index must be at least 4, got {n}")));
    }
    let top = (n - 2 + 1) / 2;
    (0..=top).map(|m| make_slope(BigInt::from(2 * m), BigInt::from(n - 2 * m - 1))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: i64,
    pub equators: Vec<EquatorReport>,
    /// Number of distinct equator slopes found.
    pub count: usize,
    /// `⌈n/2⌉`.
    pub expected_count: usize,
    pub fixed_postcritical: Vec<Corner>,
    /// One non-fixed postcritical point for even `n`, none for odd `n`.
    pub portrait_parity_ok: bool,
    pub verified: bool,
}

pub fn verify_family_matings(n: i64) -> Result<FamilyReport> {
    let slopes = family_equator_slopes(n)?;
    let pres = family_fn(n)?;
    let deg = pres.degree();
    let portrait = pres.postcritical_portrait()?;
    let fixed = portrait.fixed();
    let expected_fixed = if n % 2 == 0 { 3 } else { 4 };
    let mut equators = Vec::with_capacity(slopes.len());
    for s in &slopes {
        let r = slope_invariants(&pres, s)?;
        equators.push(report(&r, &deg, !fixed.is_empty()));
    }
    let mut distinct: Vec<&Slope> = equators.iter().filter(|e| e.equator).map(|e| &e.slope).collect();
    distinct.sort();
    distinct.dedup();
    let count = distinct.len();
    let expected_count = ((n + 1) / 2) as usize;
    let portrait_parity_ok = fixed.len() == expected_fixed;
    let verified = equators.iter().all(|e| e.equator) && count == expected_count && portrait_parity_ok;
    Ok(FamilyReport { n, equators, count, expected_count, fixed_postcritical: fixed, portrait_parity_ok, verified })
}
