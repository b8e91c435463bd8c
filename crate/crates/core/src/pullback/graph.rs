//! The graph of lifts of two disjoint core arcs of a given slope.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::trace::{alternating_sum, mirrors_near_segment};
use crate::error::{Error, Result};
use crate::exact::{make_slope, ser, IVec2, Slope};
use crate::presentation::{ClassKey, Corner, Green, Lattice, Presentation, SegmentHit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ArcTag {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Arc,
    Circle,
}

/// A lift `[x, x + (q, p)]`, one representative per class mod `Γ₁`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    #[serde(serialize_with = "ser::display")]
    pub start: IVec2,
    pub tag: ArcTag,
    #[serde(skip)]
    pub key: ClassKey,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphVertex {
    #[serde(serialize_with = "ser::display")]
    pub rep: IVec2,
    #[serde(skip)]
    pub key: ClassKey,
    pub critical: bool,
    pub postcritical: Option<Corner>,
    pub valence: usize,
}

/// A connected component, realized in the plane as the straight path
/// `start, start + u, ..., start + steps u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphComponent {
    pub kind: ComponentKind,
    pub tag: ArcTag,
    /// Indices into [`PreimageGraph::edges`].
    pub edges: Vec<usize>,
    #[serde(serialize_with = "ser::display")]
    pub start: IVec2,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageGraph {
    pub slope: Slope,
    pub side: u8,
    #[serde(serialize_with = "ser::display")]
    pub d: BigInt,
    pub edges: Vec<GraphEdge>,
    pub vertices: Vec<GraphVertex>,
    pub components: Vec<GraphComponent>,
}

impl PreimageGraph {
    pub fn arcs(&self) -> impl Iterator<Item = &GraphComponent> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Arc)
    }

    pub fn circles(&self) -> impl Iterator<Item = &GraphComponent> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Circle)
    }

    pub fn d_usize(&self) -> usize {
        self.d.to_usize().expect("d fits in usize")
    }

    pub fn noncritical_vertices(&self) -> usize {
        self.vertices.iter().filter(|v| !v.critical).count()
    }

    /// Plane vertices of a component path.
    pub fn path(&self, comp: &GraphComponent) -> Vec<IVec2> {
        let u = self.slope.direction();
        (0..=comp.steps).map(|j| &comp.start + &u.scale(&BigInt::from(j))).collect()
    }
}

fn edge_key(lat: &Lattice, x: &IVec2, u: &IVec2) -> ClassKey {
    let a = lat.key_mod2(&x.to_rational());
    let b = lat.key_mod2(&(-&(x + u)).to_rational());
    a.min(b)
}

fn postcritical_keys(pres: &Presentation, lat: &Lattice) -> Vec<(ClassKey, Corner)> {
    Corner::ALL
        .iter()
        .map(|&e| (lat.gamma_key_int(&pres.postcritical_rep(e)), e))
        .collect()
}

fn find_root(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Builds the graph whose `α` edges are the lifts of the core arc of slope
/// `s` on side `side` (lattice points with `<x, N> ≡ side mod 2`) and whose
/// `β` edges are the lifts of the disjoint core arc on the other side.
pub fn arc_preimage_graph(pres: &Presentation, s: &Slope, side: u8) -> Result<PreimageGraph> {
    if side > 1 {
        return Err(Error::BadParameter(format!("side must be 0 or 1, got {side}")));
    }
    let lat = pres.lattice();
    let u = s.direction();
    let n = s.normal();
    let d = lat.d_of_slope(s);
    let pf = postcritical_keys(pres, &lat);

    let mut edges: Vec<GraphEdge> = Vec::new();
    let mut seen: HashMap<ClassKey, usize> = HashMap::new();
    for x in lat.cosets_mod_double() {
        let parity = x.dot(&n).mod_floor(&BigInt::from(2));
        let tag = if parity == BigInt::from(side) { ArcTag::Alpha } else { ArcTag::Beta };
        let key = edge_key(&lat, &x, &u);
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key.clone(), edges.len());
        edges.push(GraphEdge { start: x, tag, key });
    }

    let mut vindex: BTreeMap<ClassKey, usize> = BTreeMap::new();
    let mut vertices: Vec<GraphVertex> = Vec::new();
    let mut ends: Vec<[usize; 2]> = Vec::new();
    for e in &edges {
        let mut pair = [0; 2];
        for (slot, p) in [e.start.clone(), &e.start + &u].into_iter().enumerate() {
            let k = lat.gamma_key_int(&p);
            let idx = *vindex.entry(k.clone()).or_insert_with(|| {
                vertices.push(GraphVertex {
                    rep: p.clone(),
                    key: k.clone(),
                    critical: !lat.contains(&p),
                    postcritical: pf.iter().find(|(pk, _)| *pk == k).map(|(_, c)| *c),
                    valence: 0,
                });
                vertices.len() - 1
            });
            vertices[idx].valence += 1;
            pair[slot] = idx;
        }
        ends.push(pair);
    }

    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    for pair in &ends {
        let a = find_root(&mut parent, pair[0]);
        let b = find_root(&mut parent, pair[1]);
        if a != b {
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, pair) in ends.iter().enumerate() {
        let r = find_root(&mut parent, pair[0]);
        groups.entry(r).or_default().push(i);
    }

    let mut components = Vec::new();
    for (_, members) in groups {
        let has_end = members
            .iter()
            .flat_map(|&i| ends[i])
            .any(|v| vertices[v].valence == 1);
        let kind = if has_end { ComponentKind::Arc } else { ComponentKind::Circle };
        let tag = edges[members[0]].tag;
        let (start, steps) = realize(&lat, &edges, &ends, &vertices, &members, kind, &u);
        components.push(GraphComponent { kind, tag, edges: members, start, steps });
    }
    components.sort_by_key(|c| (c.kind == ComponentKind::Circle, c.edges[0]));

    Ok(PreimageGraph { slope: s.clone(), side, d, edges, vertices, components })
}

/// Finds a straight plane path covering the component: from a valence-one
/// vertex for arcs, around once for circles.
fn realize(
    lat: &Lattice,
    edges: &[GraphEdge],
    ends: &[[usize; 2]],
    vertices: &[GraphVertex],
    members: &[usize],
    kind: ComponentKind,
    u: &IVec2,
) -> (IVec2, usize) {
    let start = match kind {
        ComponentKind::Arc => {
            let v = members
                .iter()
                .flat_map(|&i| ends[i])
                .find(|&v| vertices[v].valence == 1)
                .unwrap();
            vertices[v].rep.clone()
        }
        ComponentKind::Circle => edges[members[0]].start.clone(),
    };
    let mut steps = 0;
    let mut x = start.clone();
    let first = edge_key(lat, &x, u);
    loop {
        steps += 1;
        x = &x + u;
        let k = edge_key(lat, &x, u);
        let stop = match kind {
            ComponentKind::Arc => lat.contains(&x),
            ComponentKind::Circle => k == first,
        };
        if stop || steps > 4 * edges.len() {
            break;
        }
    }
    (start, steps)
}

/// Slope of a core arc given as the straight plane path from `x` to `y`
/// (a positive multiple of the direction `(q, p)` of `s`); `None` when the
/// folded displacement vanishes.
pub fn arc_slope(pres: &Presentation, s: &Slope, x: &IVec2, y: &IVec2) -> Result<Option<Slope>> {
    let lat = pres.lattice();
    let u = s.direction();
    let diff = y - x;
    if !diff.cross(&u).is_zero() || diff.is_zero() {
        return Err(Error::NotACoreArc(format!("{x} to {y} is not a path of slope {s}")));
    }
    let g = diff.x.gcd(&diff.y);
    let step = IVec2::new(&diff.x / &g, &diff.y / &g);
    if step != u {
        return Err(Error::NotACoreArc(format!("{x} to {y} runs against the direction of {s}")));
    }
    let pf = postcritical_keys(pres, &lat);
    let class_of = |p: &IVec2| {
        let k = lat.gamma_key_int(p);
        pf.iter().find(|(pk, _)| *pk == k).map(|(_, c)| *c)
    };
    let ex = class_of(x).ok_or_else(|| Error::NotACoreArc(format!("endpoint {x} is not postcritical")))?;
    let ey = class_of(y).ok_or_else(|| Error::NotACoreArc(format!("endpoint {y} is not postcritical")))?;
    if ex == ey {
        return Err(Error::NotACoreArc(format!("both endpoints lie over postcritical point {ex}")));
    }
    let mut j = BigInt::from(1);
    while j < g {
        let p = x + &u.scale(&j);
        if let Some(e) = class_of(&p) {
            return Err(Error::NotACoreArc(format!("interior point {p} lies over postcritical point {e}")));
        }
        j += 1;
    }

    let v = x.to_rational();
    let dir = diff.to_rational();
    let mut crossings = Vec::new();
    for m in mirrors_near_segment(pres, &lat, s, &v, &g) {
        match crate::presentation::segment_intersection(&v, &dir, &m) {
            SegmentHit::Miss => {}
            SegmentHit::Collinear { lo, hi } => {
                use num_traits::One;
                let zero = num_rational::BigRational::zero();
                let one = num_rational::BigRational::one();
                // touching at an endpoint of the path is allowed
                if lo.max(zero) < hi.min(one) {
                    return Err(Error::DegenerateArcModel(format!(
                        "path {x} to {y} runs along the mirror centered at {}",
                        m.center
                    )));
                }
            }
            SegmentHit::Cross { t, s: param } => {
                use num_traits::{One, Signed};
                let one = num_rational::BigRational::one();
                if t.is_positive() && t < one && param.abs() <= one {
                    crossings.push((t, m.center));
                }
            }
        }
    }
    crossings.sort();
    let c_x = effective_center(pres, &lat, x, ex)?;
    let c_y = effective_center(pres, &lat, y, ey)?;
    // image of c_y under the composed half-turns about the crossing centers
    let centers: Vec<&IVec2> = crossings.iter().map(|(_, c)| c).collect();
    let two = BigInt::from(2);
    let sum = alternating_sum(&centers).scale(&two);
    let image = if centers.len().is_multiple_of(2) { &c_y + &sum } else { &sum - &c_y };
    let disp = &image - &c_x;
    let (a, b) = lat
        .int_coords(&disp)
        .ok_or_else(|| Error::Postcondition(format!("folded arc displacement {disp} is not in Λ₁")))?;
    if a.is_zero() && b.is_zero() {
        return Ok(None);
    }
    Ok(Some(make_slope(b, a)?))
}

/// The corner to which the push map carries a postcritical lattice point.
fn effective_center(pres: &Presentation, lat: &Lattice, x: &IVec2, e: Corner) -> Result<IVec2> {
    match pres.green(e) {
        Green::Trivial => Ok(x.clone()),
        Green::Far(z) => {
            let c = pres.corner(e);
            let g = z - &c;
            for sign in [1i32, -1] {
                let center = if sign == 1 { x - &g } else { x + &g };
                let shift = &center - &c;
                let two = BigInt::from(2);
                if shift.x.is_even() && shift.y.is_even() {
                    let half = IVec2::new(&shift.x / &two, &shift.y / &two);
                    if lat.contains(&half) {
                        return Ok(center);
                    }
                }
            }
            Err(Error::Postcondition(format!("{x} is not a mirror endpoint of green {e}")))
        }
    }
}

/// A single lift of the side-`side` core arc of slope `s` joining two
/// distinct postcritical points with slope `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfLiftWitness {
    pub side: u8,
    #[serde(serialize_with = "ser::display")]
    pub start: IVec2,
    #[serde(serialize_with = "ser::display")]
    pub end: IVec2,
    pub from: Corner,
    pub to: Corner,
}

pub fn degree_one_self_lift(pres: &Presentation, s: &Slope) -> Result<Option<SelfLiftWitness>> {
    let u = s.direction();
    let lat = pres.lattice();
    for side in 0..2u8 {
        let graph = arc_preimage_graph(pres, s, side)?;
        let marked = |p: &IVec2| {
            let k = lat.gamma_key_int(p);
            graph.vertices.iter().find(|v| v.key == k).and_then(|v| v.postcritical)
        };
        for e in graph.edges.iter().filter(|e| e.tag == ArcTag::Alpha) {
            let end = &e.start + &u;
            let (Some(from), Some(to)) = (marked(&e.start), marked(&end)) else {
                continue;
            };
            if from == to {
                continue;
            }
            if arc_slope(pres, s, &e.start, &end)?.as_ref() == Some(s) {
                return Ok(Some(SelfLiftWitness { side, start: e.start.clone(), end, from, to }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{euclidean_double, family_fn};

    #[test]
    fn family_graph_structure() {
        for n in 4..=8 {
            let p = family_fn(n).unwrap();
            for s in crate::exact::farey_slopes(3) {
                for side in 0..2 {
                    let g = arc_preimage_graph(&p, &s, side).unwrap();
                    let d = g.d_usize();
                    assert_eq!(g.edges.len(), 2 * n as usize);
                    assert_eq!(g.arcs().count(), 2);
                    assert!(g.arcs().all(|c| c.edges.len() == d && c.steps == d));
                    assert!(g.circles().all(|c| c.edges.len() == 2 * d && c.steps == 2 * d));
                    assert_eq!(g.noncritical_vertices(), 4);
                    assert!(g.vertices.iter().all(|v| v.valence == 1 || v.valence == 2));
                }
            }
        }
    }

    #[test]
    fn family_arc_slopes() {
        let p = family_fn(5).unwrap();
        let s = Slope::zero();
        assert_eq!(
            arc_slope(&p, &s, &IVec2::new(1, 0), &IVec2::new(2, 0)).unwrap(),
            Some(Slope::zero())
        );
        let w = degree_one_self_lift(&p, &s).unwrap().unwrap();
        assert_ne!(w.from, w.to);
        assert_eq!(arc_slope(&p, &s, &w.start, &w.end).unwrap(), Some(s.clone()));
    }

    #[test]
    fn slope_two_arc() {
        let p = family_fn(5).unwrap();
        let s = Slope::new(2, 1).unwrap();
        assert_eq!(
            arc_slope(&p, &s, &IVec2::new(-1, 0), &IVec2::new(0, 2)).unwrap(),
            Some(Slope::new(2, 1).unwrap())
        );
    }

    #[test]
    fn not_core_arcs() {
        let p = family_fn(5).unwrap();
        let s = Slope::zero();
        assert!(matches!(
            arc_slope(&p, &s, &IVec2::new(3, 0), &IVec2::new(4, 0)),
            Err(Error::NotACoreArc(_))
        ));
    }

    #[test]
    fn euclidean_has_no_self_lift() {
        assert_eq!(degree_one_self_lift(&euclidean_double(), &Slope::zero()).unwrap(), None);
    }

    #[test]
    fn f5_slope_one_self_lift() {
        let p = family_fn(5).unwrap();
        let s = Slope::new(1, 1).unwrap();
        let w = degree_one_self_lift(&p, &s).unwrap().unwrap();
        assert_eq!(arc_slope(&p, &s, &w.start, &w.end).unwrap(), Some(s.clone()));
        // the omit consequence: every other fixed slope has a single essential component
        for t in crate::exact::farey_slopes(12) {
            let r = crate::pullback::slope_invariants(&p, &t).unwrap();
            if r.is_fixed() && t != s {
                assert_eq!(r.c, 1, "{t}");
            }
        }
    }
}
