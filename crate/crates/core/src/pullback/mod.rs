//! Pullback of curves and arcs: photon traces, slope-function values and
//! the preimage graph of core arcs.

mod graph;
mod invariants;
pub(crate) mod trace;

pub use graph::{
    arc_preimage_graph, arc_slope, degree_one_self_lift, ArcTag, ComponentKind, GraphComponent,
    GraphEdge, GraphVertex, PreimageGraph, SelfLiftWitness,
};
pub use invariants::{
    slope_invariants, slope_invariants_many, slope_invariants_with, ComponentInfo,
    InvariantOptions, PreimageSummary,
};
pub use trace::{line_base_point, trace_from, trace_segment, Crossing, PhotonTrace, TRACE_RETRY_CAP};
