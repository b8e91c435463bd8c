use std::fmt::Write;
use std::path::Path;

use netslope_core::exact::{cusp_of_slope, fmt_rat, BoundaryPoint};
use netslope_core::halfspace::{fixed_point_search, omit_check, probe_arc, rationality_verdict_with, Verdict};
use netslope_core::matings::{find_equators, verify_family_matings};
use netslope_core::presentation::{family_fn, parse, serialize, Presentation};
use netslope_core::pullback::{degree_one_self_lift, slope_invariants};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Command;
use crate::svg::emit_svg;

/// A domain error; usage errors never get past argument parsing.
pub enum Failure {
    Domain(String),
}

impl From<netslope_core::Error> for Failure {
    fn from(e: netslope_core::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

pub struct Outcome {
    pub subcommand: &'static str,
    pub input: Option<Presentation>,
    pub params: Value,
    pub results: Value,
    pub text: String,
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn load(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    Ok(parse(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

pub fn execute(cmd: &Command, debug: bool) -> Result<Outcome, Failure> {
    let mut text = String::new();
    let out = match cmd {
        Command::Eval { file, slope } => {
            let pres = load(file)?;
            let r = slope_invariants(&pres, slope)?;
            let mut results = value(&r);
            if debug {
                for (info, t) in r.components.iter().zip(&r.traces) {
                    writeln!(text, "component {} offset {}", info.class, fmt_rat(&info.offset)).unwrap();
                    text.push_str(&t.dump());
                }
                results["traces"] = value(&r.traces);
            }
            writeln!(text, "{}", r.line()).unwrap();
            Outcome {
                subcommand: "eval",
                input: Some(pres),
                params: json!({ "slope": slope }),
                results,
                text,
            }
        }
        Command::Portrait { file } => {
            let pres = load(file)?;
            let portrait = pres.postcritical_portrait()?;
            let orbifold = portrait.orbifold_type();
            for p in &portrait.points {
                let crit = if p.critical { " critical" } else { "" };
                writeln!(text, "{} {} -> {}{}", p.corner, p.representative, p.image, crit).unwrap();
            }
            let fixed: Vec<String> = portrait.fixed().iter().map(|c| c.to_string()).collect();
            writeln!(text, "fixed: {}", if fixed.is_empty() { "none".into() } else { fixed.join(" ") }).unwrap();
            writeln!(text, "orbifold: {orbifold:?}").unwrap();
            Outcome {
                subcommand: "portrait",
                input: Some(pres),
                params: json!({}),
                results: json!({ "portrait": value(&portrait), "orbifold": value(&orbifold) }),
                text,
            }
        }
        Command::Intervals { file, slope, kind } => {
            let pres = load(file)?;
            let deg = pres.degree();
            let r = slope_invariants(&pres, slope)?;
            writeln!(text, "{}", r.line()).unwrap();
            let mut arcs = Vec::new();
            for family in kind.families() {
                let arc = probe_arc(family, &r, &deg)?;
                match &arc {
                    Some(a) => writeln!(text, "{a}").unwrap(),
                    None if r.mu.is_nonslope() => writeln!(text, "{family:?}: none (nonslope)").unwrap(),
                    None => writeln!(text, "{family:?}: empty").unwrap(),
                }
                arcs.push(json!({ "family": value(&family), "arc": value(&arc) }));
            }
            Outcome {
                subcommand: "intervals",
                input: Some(pres),
                params: json!({ "slope": slope, "kind": format!("{kind:?}") }),
                results: json!({ "probe": value(&r), "arcs": arcs }),
                text,
            }
        }
        Command::Cover { file, height, kind, svg, omit } => {
            let pres = load(file)?;
            let report = rationality_verdict_with(&pres, *height, *kind)?;
            let mut omitted: Vec<BoundaryPoint> = Vec::new();
            for s in omit {
                if degree_one_self_lift(&pres, s)?.is_some() {
                    omitted.push(cusp_of_slope(s));
                }
            }
            if let Some(path) = svg {
                emit_svg(&report.coverage, &omitted, path)
                    .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            }
            match &report.verdict {
                Verdict::Obstructed { slope, rho } => {
                    writeln!(text, "verdict: Obstructed at {slope} (rho={})", fmt_rat(rho)).unwrap()
                }
                v => writeln!(text, "verdict: {}", v.tag()).unwrap(),
            }
            let cov = &report.coverage;
            writeln!(text, "probes: {} arcs: {}", cov.probes.len(), cov.arcs().count()).unwrap();
            let residual: Vec<String> = cov.residual.iter().map(|p| p.to_string()).collect();
            writeln!(text, "residual: {}", if residual.is_empty() { "empty".into() } else { residual.join(" ") })
                .unwrap();
            for c in &cov.certified {
                let mark = if c.certified { "certified" } else { "not certified" };
                writeln!(text, "  {}: {} ({mark})", c.point, c.reason).unwrap();
            }
            for x in &omitted {
                writeln!(text, "omitted: {x}").unwrap();
            }
            let mut results = value(&report);
            results["omitted"] = value(&omitted);
            let params = json!({
                "height": height,
                "kind": value(kind),
                "omit": value(omit),
                "svg": svg.as_ref().map(|p| p.display().to_string()),
            });
            Outcome { subcommand: "cover", input: Some(pres), params, results, text }
        }
        Command::Fixed { file, height } => {
            let pres = load(file)?;
            let fixed = fixed_point_search(&pres, *height)?;
            for f in &fixed {
                let mark = if f.is_obstruction() { " obstruction" } else { "" };
                writeln!(text, "{} rho={} c={} d={}{mark}", f.slope, fmt_rat(&f.rho), f.c, f.d).unwrap();
            }
            Outcome {
                subcommand: "fixed",
                input: Some(pres),
                params: json!({ "height": height }),
                results: value(&fixed),
                text,
            }
        }
        Command::Omit { file, slope, height } => {
            let pres = load(file)?;
            let r = omit_check(&pres, slope, *height)?;
            match &r.witness {
                Some(w) => writeln!(
                    text,
                    "witness: side {} {} -> {} joins {} to {}",
                    w.side, w.start, w.end, w.from, w.to
                )
                .unwrap(),
                None => writeln!(text, "witness: none").unwrap(),
            }
            for c in &r.consequences {
                let mark = if c.holds { "ok" } else { "FAIL" };
                writeln!(text, "[{mark}] {}: {}", c.name, c.detail).unwrap();
            }
            if r.witness.is_some() {
                writeln!(text, "strong hypotheses: {}", r.strong_hypotheses).unwrap();
            }
            if let Some(t) = &r.accumulating_at {
                writeln!(text, "omitted points accumulate at the cusp of {t}").unwrap();
            }
            Outcome {
                subcommand: "omit",
                input: Some(pres),
                params: json!({ "slope": slope, "height": height }),
                results: value(&r),
                text,
            }
        }
        Command::Matings { file, height } => {
            let pres = load(file)?;
            let eq = find_equators(&pres, *height)?;
            for e in &eq {
                writeln!(text, "{} d={} rho={} orientation: {}", e.slope, e.d, fmt_rat(&e.rho), e.orientation)
                    .unwrap();
            }
            if eq.is_empty() {
                writeln!(text, "no equators").unwrap();
            }
            Outcome {
                subcommand: "matings",
                input: Some(pres),
                params: json!({ "height": height }),
                results: value(&eq),
                text,
            }
        }
        Command::Family { n } => {
            let r = verify_family_matings(*n)?;
            for e in &r.equators {
                writeln!(
                    text,
                    "{} fixed={} full_degree={} equator={}",
                    e.slope, e.conditions.fixed, e.conditions.full_degree, e.equator
                )
                .unwrap();
            }
            writeln!(text, "count={} expected={} verified={}", r.count, r.expected_count, r.verified).unwrap();
            Outcome {
                subcommand: "family",
                input: Some(family_fn(*n)?),
                params: json!({ "n": n }),
                results: value(&r),
                text,
            }
        }
        Command::FamilyGen { n, out } => {
            let pres = family_fn(*n)?;
            let body = serialize(&pres);
            match out {
                Some(path) => {
                    write_file(path, &body)?;
                    writeln!(text, "wrote {}", path.display()).unwrap();
                }
                None => text.push_str(&body),
            }
            Outcome {
                subcommand: "family-gen",
                input: Some(pres),
                params: json!({ "n": n, "out": out.as_ref().map(|p| p.display().to_string()) }),
                results: json!({ "presentation": body }),
                text,
            }
        }
    };
    Ok(out)
}
