use netslope_core::exact::{rat, Slope};
use netslope_core::halfspace::{fixed_point_search, omit_check};
use netslope_core::matings::{family_equator_slopes, find_equators, verify_family_matings};
use netslope_core::presentation::{family_fn, OrbifoldType};
use num_bigint::BigInt;

#[test]
fn family_matings_verified() {
    for n in 4..=12 {
        let r = verify_family_matings(n).unwrap();
        assert!(r.verified, "n={n}: {r:?}");
        assert_eq!(r.count as i64, (n + 1) / 2);
        assert_eq!(r.fixed_postcritical.len(), if n % 2 == 0 { 3 } else { 4 });
    }
}

#[test]
fn equators_are_fixed_points_with_multiplier_one_over_n() {
    for n in 4..=8 {
        let p = family_fn(n).unwrap();
        let fixed = fixed_point_search(&p, 8).unwrap();
        let eq = find_equators(&p, 8).unwrap();
        for s in family_equator_slopes(n).unwrap() {
            assert!(eq.iter().any(|e| e.slope == s), "n={n} {s}");
        }
        for e in &eq {
            let f = fixed.iter().find(|f| f.slope == e.slope).expect("equator is fixed");
            assert_eq!(f.rho, rat(1, n));
            assert_eq!(f.d, BigInt::from(n));
            assert_eq!(e.orientation, "fixed postcritical point");
        }
    }
}

#[test]
fn family_orbifolds_are_hyperbolic() {
    for n in 4..=12 {
        assert_eq!(family_fn(n).unwrap().orbifold_type().unwrap(), OrbifoldType::Hyperbolic);
    }
}

#[test]
fn slope_zero_omit_consequences() {
    for n in 4..=6 {
        let r = omit_check(&family_fn(n).unwrap(), &Slope::zero(), 6).unwrap();
        assert!(r.witness.is_some(), "n={n}");
        assert!(r.all_hold(), "n={n}: {:?}", r.consequences);
    }
}

#[test]
fn family_is_never_obstructed() {
    use netslope_core::halfspace::{coverage_run, rationality_verdict, CoverKind, Verdict};
    use netslope_core::exact::BoundaryPoint;
    for n in 4..=8 {
        let p = family_fn(n).unwrap();
        let r = rationality_verdict(&p, 8).unwrap();
        assert!(!matches!(r.verdict, Verdict::Obstructed { .. }), "n={n}");
    }
    let cov = coverage_run(&family_fn(5).unwrap(), 12, CoverKind::Obstruction).unwrap();
    assert!(cov.residual_contains(&BoundaryPoint::Infinity));
}
