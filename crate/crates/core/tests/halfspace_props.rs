mod common;

use netslope_core::exact::{
    cusp_of_slope, farey_slopes, intersection_number, make_slope, rat, BoundaryPoint, QuadNum, Slope,
};
use netslope_core::halfspace::{
    coverage_run, excluded_arc, fixed_point_search, halfspace_geometric_arc, parabolic_trace, probe_arcs,
    rationality_verdict, replay, tangent_horoball_scale, ArcFamily, ArcKind, CoverKind, Horoball,
};
use netslope_core::presentation::OrbifoldType;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn slope() -> impl Strategy<Value = Slope> {
    (-25i64..=25, -25i64..=25)
        .prop_filter("not 0/0", |(p, q)| *p != 0 || *q != 0)
        .prop_map(|(p, q)| make_slope(p.into(), q.into()).unwrap())
}

fn positive() -> impl Strategy<Value = BigRational> {
    (1i64..=40, 1i64..=40).prop_map(|(n, d)| rat(n, d))
}

fn kind() -> impl Strategy<Value = ArcKind> {
    prop_oneof![
        (positive(), positive()).prop_map(|(rho, rho0)| ArcKind::GeneralFixed { rho, rho0 }),
        positive().prop_map(|rho| ArcKind::Obstruction { rho }),
        (1i64..=12).prop_map(|d| ArcKind::FixedPoint { deg: d.into() }),
        (1i64..=12, 1i64..=12).prop_map(|(d, e)| ArcKind::NetObstruction { d: d.into(), e: e.into() }),
        (1i64..=12).prop_map(|d| ArcKind::NetFixedPoint { d: d.into() }),
    ]
}

fn sample_points() -> Vec<BoundaryPoint> {
    let mut pts: Vec<BoundaryPoint> = farey_slopes(9).iter().map(cusp_of_slope).collect();
    for k in -6..=6 {
        pts.push(BoundaryPoint::real(QuadNum::new(rat(k, 3), rat(1, 5), 2.into())));
    }
    pts
}

/// `[[a, b], [c, d]]` with `a/c = -q/p` and determinant one.
fn transport(s: &Slope) -> [[i128; 2]; 2] {
    let (p, q): (i128, i128) = (s.p().try_into().unwrap(), s.q().try_into().unwrap());
    let (a, c) = (-q, p);
    // b·c - a·d = -1 via extended Euclid on (a, c)
    let (mut r0, mut r1, mut x0, mut x1, mut y0, mut y1) = (a, c, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let k = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - k * r1);
        (x0, x1) = (x1, x0 - k * x1);
        (y0, y1) = (y1, y0 - k * y1);
    }
    // x0·a + y0·c = r0 = ±1; take d = x0·r0, b = -y0·r0
    let (d, b) = (x0 * r0, -y0 * r0);
    assert_eq!(a * d - b * c, 1);
    [[a, b], [c, d]]
}

fn mul(x: [[i128; 2]; 2], y: [[i128; 2]; 2]) -> [[i128; 2]; 2] {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

fn inv(x: [[i128; 2]; 2]) -> [[i128; 2]; 2] {
    [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
}

proptest! {
    #[test]
    fn geometric_arc_equals_quadratic_arc(s in slope(), t in slope(), rho in positive()) {
        prop_assume!(s != t);
        let quad = excluded_arc(&ArcKind::Obstruction { rho: rho.clone() }, &s, &t).unwrap().unwrap();
        let geo = halfspace_geometric_arc(&s, &t, &rho).unwrap();
        prop_assert_eq!((&quad.lo, &quad.hi), (&geo.lo, &geo.hi));
        prop_assert!(quad.contains(&cusp_of_slope(&s)));
    }

    #[test]
    fn arc_membership_agrees_with_endpoints(k in kind(), s in slope(), t in slope()) {
        if let Some(arc) = excluded_arc(&k, &s, &t).unwrap() {
            for x in sample_points().iter().chain([&arc.lo, &arc.hi]) {
                prop_assert_eq!(arc.contains(x), arc.endpoints_contain(x), "{} at {}", arc, x);
            }
        }
    }

    #[test]
    fn net_obstruction_arc_contains_obstruction_arc(
        s in slope(), t in slope(), d in 1i64..=8, c in 1i64..=8, extra in 0i64..=6,
    ) {
        let deg = c * d + extra;
        let e = netslope_core::halfspace::net_divisor(&BigInt::from(deg));
        let small = excluded_arc(&ArcKind::Obstruction { rho: rat(c, d) }, &s, &t).unwrap();
        let big = excluded_arc(&ArcKind::NetObstruction { d: d.into(), e }, &s, &t).unwrap();
        if let Some(small) = small {
            let big = big.expect("net arc nonempty");
            for x in sample_points() {
                prop_assert!(!small.contains(&x) || big.contains(&x));
            }
        }
    }

    #[test]
    fn parabolic_trace_matches_matrices(n1 in -9i64..=9, n2 in -9i64..=9, s1 in slope(), s2 in slope()) {
        let (q1, q2) = (transport(&s1), transport(&s2));
        let p1 = mul(mul(q1, [[1, n1 as i128], [0, 1]]), inv(q1));
        let p2 = mul(mul(q2, [[1, n2 as i128], [0, 1]]), inv(q2));
        let m = mul(p1, inv(p2));
        let tr = (m[0][0] + m[1][1]).abs();
        prop_assert_eq!(parabolic_trace(&n1.into(), &s1, &n2.into(), &s2), BigInt::from(tr));
    }

    #[test]
    fn tangent_horoballs_touch(s in slope(), t in slope(), m in positive()) {
        prop_assume!(s != t);
        let m2 = tangent_horoball_scale(&s, &t, &m).unwrap();
        prop_assert_eq!(tangent_horoball_scale(&t, &s, &m2).unwrap(), m.clone());
        let i = intersection_number(&s, &t);
        prop_assert_eq!(&m * &m2 * rat(&i * &i, 1), rat(1, 1));
        let a = Horoball::new(s.clone(), m).unwrap();
        let b = Horoball::new(t.clone(), m2).unwrap();
        match (a.diameter(), b.diameter()) {
            (Some(da), Some(db)) => {
                let (xa, xb) = (a.base_point(), b.base_point());
                let gap = xa.as_rational().unwrap() - xb.as_rational().unwrap();
                prop_assert_eq!(&gap * &gap, da * db);
            }
            // the horoball at ∞ is {Im z > m}
            (None, Some(db)) => prop_assert_eq!(db, a.scale.clone()),
            (Some(da), None) => prop_assert_eq!(da, b.scale.clone()),
            (None, None) => unreachable!(),
        }
    }
}

#[test]
fn exclusion_soundness() {
    let mut corpus = common::random_corpus(6);
    corpus.extend(common::family(4..=5));
    for p in &corpus {
        let fixed = fixed_point_search(p, 10).unwrap();
        for family in [ArcFamily::FixedPoint, ArcFamily::NetFixedPoint] {
            for a in probe_arcs(p, 7, family).unwrap() {
                for f in &fixed {
                    assert!(!a.contains(&cusp_of_slope(&f.slope)), "{a} contains fixed {}", f.slope);
                }
            }
        }
        for family in [ArcFamily::Obstruction, ArcFamily::NetObstruction] {
            for a in probe_arcs(p, 7, family).unwrap() {
                for f in fixed.iter().filter(|f| f.is_obstruction()) {
                    assert!(!a.contains(&cusp_of_slope(&f.slope)), "{a} contains obstruction {}", f.slope);
                }
            }
        }
    }
}

#[test]
fn residual_shrinks_with_height() {
    let pts = sample_points();
    for p in common::family(4..=6).iter().chain(&common::random_corpus(6)) {
        if p.orbifold_type().unwrap() != OrbifoldType::Hyperbolic {
            continue;
        }
        let mut prev = coverage_run(p, 2, CoverKind::Both).unwrap();
        for h in 3..=6 {
            let next = coverage_run(p, h, CoverKind::Both).unwrap();
            for x in &pts {
                assert!(!next.residual_contains(x) || prev.residual_contains(x), "h={h} at {x}");
            }
            prev = next;
        }
    }
}

#[test]
fn verdicts_replay() {
    for p in common::family(5..=6).iter().chain(&common::random_corpus(5)) {
        if p.orbifold_type().unwrap() != OrbifoldType::Hyperbolic {
            continue;
        }
        let r = rationality_verdict(p, 5).unwrap();
        assert!(replay(p, &r).unwrap());
    }
}

#[test]
fn obstructed_verdict_from_random_search() {
    use netslope_core::halfspace::Verdict;
    // slope_invariants is the oracle: find a hyperbolic map with a fixed
    // slope of multiplier at least one among small probes
    let mut found = 0;
    for seed in 0..400u64 {
        let p = netslope_core::presentation::random_presentation(seed, 8).unwrap();
        if p.orbifold_type().unwrap() != OrbifoldType::Hyperbolic {
            continue;
        }
        let fixed = fixed_point_search(&p, 3).unwrap();
        let Some(obs) = fixed.iter().find(|f| f.is_obstruction()) else { continue };
        let r = rationality_verdict(&p, 3).unwrap();
        match &r.verdict {
            Verdict::Obstructed { slope, rho } => {
                assert!(fixed.iter().any(|f| &f.slope == slope && &f.rho == rho && f.is_obstruction()));
                assert!(*rho >= rat(1, 1), "{}", obs.slope);
            }
            v => panic!("seed {seed}: {v:?} despite obstruction {}", obs.slope),
        }
        assert!(replay(&p, &r).unwrap());
        found += 1;
        if found == 3 {
            break;
        }
    }
    assert!(found > 0, "no obstructed map among the seeds");
}
