use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use netslope_core::exact::Slope;
use netslope_core::halfspace::{fixed_point_search, rationality_verdict_with, CoverKind};
use netslope_core::matings::verify_family_matings;
use netslope_core::presentation::{euclidean_double, family_fn, serialize};
use netslope_core::pullback::slope_invariants;
use serde_json::Value;

fn netslope(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netslope")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn family_file(dir: &Path, n: i64) -> PathBuf {
    let path = dir.join(format!("f{n}.txt"));
    let o = netslope(&["family-gen", "--n", &n.to_string(), "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    path
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = netslope(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_f5_slope_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f5 = family_file(dir.path(), 5);
    let o = netslope(&["eval", "-p", f5.to_str().unwrap(), "-s", "0/1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "mu=0/1 d=5 c=1 rho=1/5\n");
}

#[test]
fn family_gen_then_eval_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    for n in [4, 7] {
        let path = family_file(dir.path(), n);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), serialize(&family_fn(n).unwrap()));
        for s in ["0/1", "1/2", "-3/1", "inf"] {
            let r = slope_invariants(&family_fn(n).unwrap(), &s.parse::<Slope>().unwrap()).unwrap();
            let o = netslope(&["eval", "-p", path.to_str().unwrap(), "-s", s]);
            assert_eq!(stdout(&o).trim(), r.line());
            let v = json(&["eval", "-p", path.to_str().unwrap(), "-s", s]);
            assert_eq!(v["results"], serde_json::to_value(&r).unwrap());
        }
    }
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let f5 = family_file(dir.path(), 5);
    let p = f5.to_str().unwrap();
    for args in [
        vec!["eval", "-p", p, "-s", "0/0"],
        vec!["eval", "-p", p],
        vec!["cover", "-p", p, "-H", "3", "--kind", "sideways"],
        vec!["nonsense"],
    ] {
        assert_eq!(netslope(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let e = dir.path().join("e.txt");
    std::fs::write(&e, serialize(&euclidean_double())).unwrap();
    let o = netslope(&["cover", "-p", e.to_str().unwrap(), "-H", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Euclidean"));
    assert_eq!(netslope(&["eval", "-p", "/nonexistent/x.txt", "-s", "0"]).status.code(), Some(1));
    assert_eq!(netslope(&["family", "--n", "3"]).status.code(), Some(1));
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "netmap-presentation v1\nlambda1: 1 0\n").unwrap();
    assert_eq!(netslope(&["portrait", "-p", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn family_reports_three_equators_for_five() {
    let o = netslope(&["family", "--n", "5"]);
    assert!(stdout(&o).contains("count=3 expected=3 verified=true"));
    let v = json(&["family", "--n", "5"]);
    assert_eq!(v["results"], serde_json::to_value(verify_family_matings(5).unwrap()).unwrap());
    assert_eq!(v["results"]["equators"].as_array().unwrap().len(), 3);
}

#[test]
fn reports_are_thin_adapters() {
    let dir = tempfile::tempdir().unwrap();
    let f6 = family_file(dir.path(), 6);
    let p = f6.to_str().unwrap();
    let pres = family_fn(6).unwrap();
    let v = json(&["fixed", "-p", p, "-H", "5"]);
    assert_eq!(v["results"], serde_json::to_value(fixed_point_search(&pres, 5).unwrap()).unwrap());
    let v = json(&["cover", "-p", p, "-H", "5", "--kind", "net"]);
    let lib = rationality_verdict_with(&pres, 5, CoverKind::NetObstruction).unwrap();
    let mut expected = serde_json::to_value(&lib).unwrap();
    expected["omitted"] = Value::Array(vec![]);
    assert_eq!(v["results"], expected);
    assert_eq!(v["input"]["presentation"], Value::String(serialize(&pres)));
    assert!(v["input"]["digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(v.get("timing").is_none());
    let t = json(&["--timing", "portrait", "-p", p]);
    assert!(t["timing"]["elapsed_ms"].is_u64());
}

#[test]
fn svg_marks_infinity_for_f5() {
    let dir = tempfile::tempdir().unwrap();
    let f5 = family_file(dir.path(), 5);
    let svg = dir.path().join("f5.svg");
    let o = netslope(&[
        "cover", "-p", f5.to_str().unwrap(), "-H", "12", "--kind", "obstruction",
        "--svg", svg.to_str().unwrap(), "--omit", "0",
    ]);
    assert!(o.status.success());
    let body = std::fs::read_to_string(&svg).unwrap();
    // ∞ is drawn at the top of the circle
    assert!(body.contains(r#"<circle class="residual" cx="220.000" cy="50.000" r="4"/>"#), "{body}");
    assert!(body.contains(r#"class="omitted""#));
    assert!(stdout(&o).contains("residual: {inf}"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f7 = family_file(dir.path(), 7);
    let p = f7.to_str().unwrap();
    let run = |threads: &str, svg: &Path| {
        let o = Command::new(env!("CARGO_BIN_EXE_netslope"))
            .env("NETSLOPE_THREADS", threads)
            .args(["--json", "cover", "-p", p, "-H", "7", "--svg", svg.to_str().unwrap()])
            .output()
            .unwrap();
        assert!(o.status.success());
        (o.stdout, std::fs::read(svg).unwrap())
    };
    let (j1, s1) = run("1", &dir.path().join("a.svg"));
    let (j2, s2) = run("4", &dir.path().join("b.svg"));
    assert_eq!(s1, s2);
    // the svg path is a parameter, so compare everything else
    let strip = |b: &[u8]| {
        let mut v: Value = serde_json::from_slice(b).unwrap();
        v["params"]["svg"] = Value::Null;
        v
    };
    assert_eq!(strip(&j1), strip(&j2));
    let (j3, s3) = run("4", &dir.path().join("a.svg"));
    assert_eq!((j1, s1), (j3, s3));
}

#[test]
fn help_exits_zero() {
    let o = netslope(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("family-gen"));
}
