//! Horoball lemmas, excluded intervals on the boundary circle, coverage
//! by excluded intervals, rationality verdicts and the omit predicates.

mod arc;
mod coverage;
mod horoball;
mod omit;
mod verdict;

pub use arc::{
    excluded_arc, halfspace_geometric_arc, model_halfspace, net_divisor, open_arc_contains, probe_arc,
    ArcFamily, ArcKind, BoundaryArc, ModelHalfspace,
};
pub use coverage::{
    coverage_run, residual_of, CircleSet, CoverKind, CoverageState, DirectCheck, ProbeRecord, ResidualPiece,
};
pub use horoball::{parabolic_trace, tangent_horoball_scale, Horoball};
pub use omit::{d_f_constant, omit_check, Consequence, OmitReport, OMIT_HEIGHT};
pub use verdict::{fixed_point_search, probe_arcs, rationality_verdict, rationality_verdict_with, replay, FixedSlope, Verdict, VerdictReport};
