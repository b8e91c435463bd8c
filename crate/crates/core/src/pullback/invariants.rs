//! `μ_f(s)`, `c(s)`, `d(s)` and the multiplier from component traces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::trace::{trace_segment, PhotonTrace};
use crate::error::{Error, Result};
use crate::exact::{ser, ExtendedSlope, Slope};
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantOptions {
    /// Offset of the first component line; must not be an integer.
    pub base_offset: BigRational,
    /// Seed of the start-point schedule.
    pub seed: u64,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions { base_offset: BigRational::new(1.into(), 2.into()), seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentInfo {
    pub class: usize,
    #[serde(serialize_with = "ser::rational")]
    pub offset: BigRational,
    pub trivial: bool,
    #[serde(serialize_with = "ser::opt_display")]
    pub slope: Option<Slope>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageSummary {
    pub slope: Slope,
    #[serde(serialize_with = "ser::display")]
    pub d: BigInt,
    pub components: Vec<ComponentInfo>,
    pub c: usize,
    pub mu: ExtendedSlope,
    #[serde(serialize_with = "ser::rational")]
    pub rho: BigRational,
    #[serde(skip)]
    pub traces: Vec<PhotonTrace>,
}

impl PreimageSummary {
    pub fn is_fixed(&self) -> bool {
        self.mu.as_slope() == Some(&self.slope)
    }

    /// Comparison that ignores the start points of the traces.
    pub fn same_invariants(&self, other: &PreimageSummary) -> bool {
        self.slope == other.slope
            && self.d == other.d
            && self.c == other.c
            && self.mu == other.mu
            && self.rho == other.rho
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.trivial == b.trivial && a.slope == b.slope)
    }

    /// `mu=<slope> d=<d> c=<c> rho=<rho>`.
    pub fn line(&self) -> String {
        format!("mu={} d={} c={} rho={}", self.mu, self.d, self.c, crate::exact::fmt_rat(&self.rho))
    }
}

pub fn slope_invariants(pres: &Presentation, s: &Slope) -> Result<PreimageSummary> {
    slope_invariants_with(pres, s, &InvariantOptions::default())
}

pub fn slope_invariants_with(
    pres: &Presentation,
    s: &Slope,
    opts: &InvariantOptions,
) -> Result<PreimageSummary> {
    if opts.base_offset.is_integer() {
        return Err(Error::BadParameter("base offset must not be an integer".into()));
    }
    let lat = pres.lattice();
    let deg = lat.index();
    let d = lat.d_of_slope(s);
    let classes = (&deg / &d).to_usize().expect("component count fits in usize");
    let k = d.to_u64().expect("d fits in u64");
    let two = BigRational::from_integer(BigInt::from(2));
    let mut components = Vec::with_capacity(classes);
    let mut traces = Vec::with_capacity(classes);
    for class in 0..classes {
        let offset = &opts.base_offset + &two * BigRational::from_integer(BigInt::from(class));
        let t = trace_segment(pres, s, &offset, k, opts.seed)?;
        components.push(ComponentInfo {
            class,
            offset,
            trivial: t.is_trivial(),
            slope: t.component_slope(),
        });
        traces.push(t);
    }
    let nontrivial: Vec<&Slope> = components.iter().filter_map(|c| c.slope.as_ref()).collect();
    let c = nontrivial.len();
    if let Some(first) = nontrivial.first() {
        if nontrivial.iter().any(|x| x != first) {
            let list: Vec<String> = nontrivial.iter().map(|x| x.to_string()).collect();
            return Err(Error::Postcondition(format!(
                "components of slope {s} have different slopes: {}",
                list.join(", ")
            )));
        }
    }
    let mu = nontrivial
        .first()
        .map_or(ExtendedSlope::NonSlope, |x| ExtendedSlope::Slope((*x).clone()));
    if BigInt::from(c) * &d > deg {
        return Err(Error::Postcondition(format!("c·d exceeds the degree for slope {s}")));
    }
    let rho = if c == 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::from(c), d.clone())
    };
    Ok(PreimageSummary { slope: s.clone(), d, components, c, mu, rho, traces })
}

/// Evaluates many slopes in parallel; results keep the input order.
pub fn slope_invariants_many(pres: &Presentation, slopes: &[Slope]) -> Vec<Result<PreimageSummary>> {
    slopes.par_iter().map(|s| slope_invariants(pres, s)).collect()
}
