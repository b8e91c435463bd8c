use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::arc::{probe_arc, ArcFamily, BoundaryArc};
use crate::error::{Error, Result};
use crate::exact::{farey_slopes, ser, BoundaryPoint, ExtendedSlope, Slope};
use crate::presentation::{OrbifoldType, Presentation};
use crate::pullback::{slope_invariants_many, PreimageSummary};

/// Which excluded arcs a coverage run subtracts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoverKind {
    Obstruction,
    NetObstruction,
    /// Both of the above for every probe.
    Both,
}

impl CoverKind {
    pub fn families(self) -> &'static [ArcFamily] {
        match self {
            CoverKind::Obstruction => &[ArcFamily::Obstruction],
            CoverKind::NetObstruction => &[ArcFamily::NetObstruction],
            CoverKind::Both => &[ArcFamily::Obstruction, ArcFamily::NetObstruction],
        }
    }
}

impl std::str::FromStr for CoverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<CoverKind> {
        match s.to_ascii_lowercase().as_str() {
            "obstruction" => Ok(CoverKind::Obstruction),
            "net" | "netobstruction" | "net-obstruction" => Ok(CoverKind::NetObstruction),
            "both" => Ok(CoverKind::Both),
            _ => Err(Error::Parse { what: "arc kind (obstruction, net or both)", input: s.to_string() }),
        }
    }
}

/// A closed piece of the circle left uncovered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum ResidualPiece {
    Point { at: BoundaryPoint },
    /// Closed arc from `lo` increasing to `hi`, through `∞` when `lo > hi`.
    Arc { lo: BoundaryPoint, hi: BoundaryPoint },
    FullCircle,
}

impl ResidualPiece {
    pub fn contains(&self, x: &BoundaryPoint) -> bool {
        match self {
            ResidualPiece::Point { at } => at == x,
            ResidualPiece::Arc { lo, hi } => {
                if lo <= hi {
                    lo <= x && x <= hi
                } else {
                    x >= lo || x <= hi
                }
            }
            ResidualPiece::FullCircle => true,
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, ResidualPiece::Point { .. })
    }
}

impl fmt::Display for ResidualPiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidualPiece::Point { at } => write!(f, "{{{at}}}"),
            ResidualPiece::Arc { lo, hi } => write!(f, "[{lo}, {hi}]"),
            ResidualPiece::FullCircle => write!(f, "circle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRecord {
    pub slope: Slope,
    pub mu: ExtendedSlope,
    #[serde(serialize_with = "ser::display")]
    pub d: BigInt,
    pub c: usize,
    #[serde(serialize_with = "ser::rational")]
    pub rho: BigRational,
    pub arcs: Vec<BoundaryArc>,
}

impl ProbeRecord {
    pub fn is_fixed(&self) -> bool {
        self.mu.as_slope() == Some(&self.slope)
    }

    pub fn from_summary(summary: &PreimageSummary, deg: &BigInt, kind: CoverKind) -> Result<ProbeRecord> {
        let mut arcs = Vec::new();
        for f in kind.families() {
            if let Some(a) = probe_arc(*f, summary, deg)? {
                arcs.push(a);
            }
        }
        Ok(ProbeRecord {
            slope: summary.slope.clone(),
            mu: summary.mu.clone(),
            d: summary.d.clone(),
            c: summary.c,
            rho: summary.rho.clone(),
            arcs,
        })
    }
}

/// A residual cusp discharged by evaluating its slope directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectCheck {
    pub point: BoundaryPoint,
    #[serde(serialize_with = "ser::opt_display")]
    pub slope: Option<Slope>,
    pub mu: Option<ExtendedSlope>,
    #[serde(serialize_with = "opt_rational")]
    pub rho: Option<BigRational>,
    pub certified: bool,
    pub reason: String,
}

fn opt_rational<S: serde::Serializer>(x: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(r) => ser::rational(r, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageState {
    pub kind: CoverKind,
    pub height: u64,
    pub probes: Vec<ProbeRecord>,
    pub residual: Vec<ResidualPiece>,
    pub certified: Vec<DirectCheck>,
}

impl CoverageState {
    pub fn residual_contains(&self, x: &BoundaryPoint) -> bool {
        self.residual.iter().any(|r| r.contains(x))
    }

    pub fn arcs(&self) -> impl Iterator<Item = &BoundaryArc> {
        self.probes.iter().flat_map(|p| p.arcs.iter())
    }

    pub fn is_finite_residual(&self) -> bool {
        self.residual.iter().all(|r| r.is_point())
    }
}

/// Interval of the circle cut open at `∞`, ordered with `∞` least.
/// `hi = None` runs to the cut from below.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Interval {
    lo: BoundaryPoint,
    lo_closed: bool,
    hi: Option<(BoundaryPoint, bool)>,
}

impl Interval {
    fn whole() -> Interval {
        Interval { lo: BoundaryPoint::Infinity, lo_closed: true, hi: None }
    }

    fn is_empty(&self) -> bool {
        match &self.hi {
            None => false,
            Some((h, hc)) => match self.lo.cmp(h) {
                Ordering::Less => false,
                Ordering::Equal => !(self.lo_closed && *hc),
                Ordering::Greater => true,
            },
        }
    }

    fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let hi = match (&self.hi, &other.hi) {
            (None, h) | (h, None) => h.clone(),
            (Some((a, ac)), Some((b, bc))) => Some(match a.cmp(b) {
                Ordering::Less => (a.clone(), *ac),
                Ordering::Greater => (b.clone(), *bc),
                Ordering::Equal => (a.clone(), *ac && *bc),
            }),
        };
        Interval { lo, lo_closed, hi }
    }

    /// `self` minus the open interval `cut`.
    fn subtract(&self, cut: &Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        let below = Interval {
            lo: BoundaryPoint::Infinity,
            lo_closed: true,
            hi: Some((cut.lo.clone(), !cut.lo_closed)),
        };
        let left = self.intersect(&below);
        if !left.is_empty() {
            out.push(left);
        }
        if let Some((h, hc)) = &cut.hi {
            let above = Interval { lo: h.clone(), lo_closed: !hc, hi: None };
            let right = self.intersect(&above);
            if !right.is_empty() {
                out.push(right);
            }
        }
        out
    }
}

/// The open arc from `lo` to `hi` as intervals of the cut circle.
fn arc_intervals(lo: &BoundaryPoint, hi: &BoundaryPoint) -> Vec<Interval> {
    let inf = BoundaryPoint::Infinity;
    let upper = |p: &BoundaryPoint| Interval { lo: p.clone(), lo_closed: false, hi: None };
    match lo.cmp(hi) {
        Ordering::Less => vec![Interval { lo: lo.clone(), lo_closed: false, hi: Some((hi.clone(), false)) }],
        Ordering::Greater if hi.is_infinite() => vec![upper(lo)],
        Ordering::Greater => vec![
            Interval { lo: inf, lo_closed: true, hi: Some((hi.clone(), false)) },
            upper(lo),
        ],
        Ordering::Equal if lo.is_infinite() => vec![upper(lo)],
        Ordering::Equal => vec![
            Interval { lo: inf, lo_closed: true, hi: Some((lo.clone(), false)) },
            upper(lo),
        ],
    }
}

/// Closed subset of the circle, kept as disjoint sorted intervals of the
/// cut circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSet {
    parts: Vec<Interval>,
}

impl Default for CircleSet {
    fn default() -> Self {
        CircleSet::full()
    }
}

impl CircleSet {
    pub fn full() -> CircleSet {
        CircleSet { parts: vec![Interval::whole()] }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Removes the open arc from `lo` to `hi`.
    pub fn remove_arc(&mut self, lo: &BoundaryPoint, hi: &BoundaryPoint) {
        for cut in arc_intervals(lo, hi) {
            self.parts = self.parts.iter().flat_map(|p| p.subtract(&cut)).collect();
        }
        self.parts.sort_by(|a, b| a.lo.cmp(&b.lo));
    }

    pub fn pieces(&self) -> Vec<ResidualPiece> {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            return Vec::new();
        }
        let closed = |p: &Interval| p.lo_closed && p.hi.as_ref().is_none_or(|h| h.1);
        debug_assert!(parts.iter().all(closed), "residual must stay closed");
        let mut out = Vec::new();
        let wraps = parts.last().unwrap().hi.is_none();
        if wraps {
            let last = parts.pop().unwrap();
            if parts.is_empty() {
                // the last interval reaches the cut from below and is the
                // only piece, so it starts at ∞
                out.push(ResidualPiece::FullCircle);
                return out;
            }
            let first = parts.remove(0);
            debug_assert!(first.lo.is_infinite());
            let hi = first.hi.expect("bounded first piece").0;
            out.push(ResidualPiece::Arc { lo: last.lo, hi });
        }
        for p in parts {
            let hi = p.hi.expect("bounded piece").0;
            if hi == p.lo {
                out.push(ResidualPiece::Point { at: hi });
            } else {
                out.push(ResidualPiece::Arc { lo: p.lo, hi });
            }
        }
        out.sort_by(|a, b| piece_start(a).cmp(piece_start(b)));
        out
    }
}

fn piece_start(p: &ResidualPiece) -> &BoundaryPoint {
    match p {
        ResidualPiece::Point { at } => at,
        ResidualPiece::Arc { lo, .. } => lo,
        ResidualPiece::FullCircle => &BoundaryPoint::Infinity,
    }
}

/// Residual of the probe arcs, subtracted in probe order.
pub fn residual_of(probes: &[ProbeRecord]) -> Vec<ResidualPiece> {
    let mut set = CircleSet::full();
    for a in probes.iter().flat_map(|p| p.arcs.iter()) {
        set.remove_arc(&a.lo, &a.hi);
    }
    set.pieces()
}

pub(crate) fn ensure_hyperbolic(pres: &Presentation) -> Result<()> {
    pres.ensure_valid()?;
    if pres.orbifold_type()? == OrbifoldType::Euclidean {
        return Err(Error::UnsupportedOrbifold);
    }
    Ok(())
}

/// Evaluates every slope of height at most `height` (in parallel) and
/// subtracts their excluded arcs from the circle in Farey order.
pub fn coverage_run(pres: &Presentation, height: u64, kind: CoverKind) -> Result<CoverageState> {
    ensure_hyperbolic(pres)?;
    let deg = pres.degree();
    let slopes = farey_slopes(height);
    let mut probes = Vec::with_capacity(slopes.len());
    for r in slope_invariants_many(pres, &slopes) {
        probes.push(ProbeRecord::from_summary(&r?, &deg, kind)?);
    }
    let residual = residual_of(&probes);
    Ok(CoverageState { kind, height, probes, residual, certified: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn pt(n: i64, d: i64) -> BoundaryPoint {
        BoundaryPoint::rational(rat(n, d))
    }

    #[test]
    fn subtract_plain_and_wrapping() {
        let mut s = CircleSet::full();
        s.remove_arc(&pt(-1, 1), &pt(1, 1));
        assert_eq!(s.pieces(), vec![ResidualPiece::Arc { lo: pt(1, 1), hi: pt(-1, 1) }]);
        s.remove_arc(&pt(2, 1), &pt(-2, 1));
        assert_eq!(
            s.pieces(),
            vec![
                ResidualPiece::Arc { lo: pt(-2, 1), hi: pt(-1, 1) },
                ResidualPiece::Arc { lo: pt(1, 1), hi: pt(2, 1) },
            ]
        );
        s.remove_arc(&pt(-3, 1), &pt(-1, 1));
        s.remove_arc(&pt(1, 1), &pt(3, 1));
        assert_eq!(
            s.pieces(),
            vec![ResidualPiece::Point { at: pt(-1, 1) }, ResidualPiece::Point { at: pt(1, 1) }]
        );
    }

    #[test]
    fn infinity_survives_as_point() {
        let mut s = CircleSet::full();
        s.remove_arc(&BoundaryPoint::Infinity, &pt(1, 1));
        s.remove_arc(&pt(0, 1), &BoundaryPoint::Infinity);
        assert_eq!(s.pieces(), vec![ResidualPiece::Point { at: BoundaryPoint::Infinity }]);
        s.remove_arc(&pt(1, 1), &pt(1, 1));
        assert!(s.pieces().is_empty());
    }

    #[test]
    fn punctured_removal() {
        let mut s = CircleSet::full();
        s.remove_arc(&BoundaryPoint::Infinity, &BoundaryPoint::Infinity);
        assert_eq!(s.pieces(), vec![ResidualPiece::Point { at: BoundaryPoint::Infinity }]);
        let mut s = CircleSet::full();
        s.remove_arc(&pt(1, 2), &pt(1, 2));
        assert_eq!(s.pieces(), vec![ResidualPiece::Point { at: pt(1, 2) }]);
    }

    #[test]
    fn arc_through_infinity_in_residual() {
        let mut s = CircleSet::full();
        s.remove_arc(&pt(-1, 1), &pt(1, 1));
        let p = s.pieces();
        assert!(p[0].contains(&BoundaryPoint::Infinity));
        assert!(p[0].contains(&BoundaryPoint::rational(int(5))));
        assert!(!p[0].contains(&BoundaryPoint::rational(int(0))));
    }

    #[test]
    fn euclidean_refused() {
        let e = crate::presentation::euclidean_double();
        assert_eq!(coverage_run(&e, 3, CoverKind::Obstruction), Err(Error::UnsupportedOrbifold));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("net".parse::<CoverKind>().unwrap(), CoverKind::NetObstruction);
        assert!("x".parse::<CoverKind>().is_err());
    }
}
