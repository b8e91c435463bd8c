//! Deterministic SVG plots of a coverage state on the boundary circle.
//!
//! A point `x` is drawn at angle `2·atan(x)` from the bottom of the
//! circle, so `0` sits at the bottom, `∞` at the top and positive reals on
//! the right.

use std::f64::consts::PI;
use std::fmt::Write;
use std::io;
use std::path::Path;

use netslope_core::exact::BoundaryPoint;
use netslope_core::halfspace::{CoverageState, ResidualPiece};

const SIZE: f64 = 440.0;
const C: f64 = SIZE / 2.0;
const R: f64 = 170.0;

fn angle(x: &BoundaryPoint) -> f64 {
    match x.to_f64() {
        None => PI,
        Some(v) => 2.0 * v.atan(),
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn at(theta: f64, r: f64) -> (String, String) {
    (num(C + r * theta.sin()), num(C + r * theta.cos()))
}

/// Path running from `lo` in the increasing direction to `hi`.
fn arc_path(lo: &BoundaryPoint, hi: &BoundaryPoint, r: f64) -> String {
    let (t0, t1) = (angle(lo), angle(hi));
    let mut span = (t1 - t0).rem_euclid(2.0 * PI);
    if lo == hi || span == 0.0 {
        span = 2.0 * PI - 1e-3;
    }
    // split so that no single SVG arc exceeds half a turn
    let mid = t0 + span / 2.0;
    let (x0, y0) = at(t0, r);
    let (xm, ym) = at(mid, r);
    let (x1, y1) = at(t0 + span, r);
    let rr = num(r);
    format!("M {x0} {y0} A {rr} {rr} 0 0 0 {xm} {ym} A {rr} {rr} 0 0 0 {x1} {y1}")
}

pub fn render_svg(state: &CoverageState, omitted: &[BoundaryPoint]) -> String {
    let mut s = String::new();
    let size = num(SIZE);
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r##"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#444" stroke-width="1"/>"##,
        c = num(C),
        r = num(R)
    )
    .unwrap();
    let (ix, iy) = at(PI, R + 16.0);
    writeln!(s, r#"<text x="{ix}" y="{iy}" text-anchor="middle" font-size="14">∞</text>"#).unwrap();

    let arcs: Vec<_> = state.arcs().collect();
    if !arcs.is_empty() {
        writeln!(s, r##"<g fill="none" stroke="#3182bd" stroke-opacity="0.25" stroke-width="12">"##).unwrap();
        for a in arcs {
            writeln!(s, r#"<path d="{}"/>"#, arc_path(&a.lo, &a.hi, R)).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }

    if !state.residual.is_empty() {
        writeln!(s, r##"<g fill="#d62728" stroke="#d62728">"##).unwrap();
        for piece in &state.residual {
            match piece {
                ResidualPiece::Point { at: x } => {
                    let (px, py) = at(angle(x), R);
                    writeln!(s, r#"<circle class="residual" cx="{px}" cy="{py}" r="4"/>"#).unwrap();
                }
                ResidualPiece::Arc { lo, hi } => {
                    writeln!(
                        s,
                        r#"<path class="residual" d="{}" fill="none" stroke-width="4"/>"#,
                        arc_path(lo, hi, R)
                    )
                    .unwrap();
                }
                ResidualPiece::FullCircle => {
                    writeln!(
                        s,
                        r#"<circle class="residual" cx="{c}" cy="{c}" r="{r}" fill="none" stroke-width="4"/>"#,
                        c = num(C),
                        r = num(R)
                    )
                    .unwrap();
                }
            }
        }
        writeln!(s, "</g>").unwrap();
    }

    for x in omitted {
        let t = angle(x);
        let (px, py) = at(t, R);
        let (cx, cy) = (num(C + R * t.sin() - 4.0), num(C + R * t.cos() - 4.0));
        writeln!(
            s,
            r##"<rect class="omitted" x="{cx}" y="{cy}" width="8" height="8" fill="none" stroke="#2ca02c" stroke-width="2" transform="rotate(45 {px} {py})"/>"##
        )
        .unwrap();
    }
    writeln!(s, "</svg>").unwrap();
    s
}

pub fn emit_svg(state: &CoverageState, omitted: &[BoundaryPoint], path: &Path) -> io::Result<()> {
    std::fs::write(path, render_svg(state, omitted))
}
