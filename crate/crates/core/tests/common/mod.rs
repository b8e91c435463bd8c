#![allow(dead_code)]

use netslope_core::presentation::{family_fn, random_presentation, Presentation};

/// Random valid presentations of degree at most 8, seeds `0..n`.
pub fn random_corpus(n: u64) -> Vec<Presentation> {
    (0..n).map(|seed| random_presentation(seed, 8).expect("sampler")).collect()
}

pub fn family(range: std::ops::RangeInclusive<i64>) -> Vec<Presentation> {
    range.map(|n| family_fn(n).unwrap()).collect()
}

use netslope_core::exact::{intersection_number, Slope};
use netslope_core::pullback::{arc_preimage_graph, arc_slope, PreimageSummary};
use netslope_core::Error;
use num_bigint::BigInt;

#[derive(Debug, Default)]
pub struct ArcTally {
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<String>,
}

/// Checks both arc inequalities for every run of consecutive core arcs
/// along every component of the preimage graph of slope `s`, against the
/// curve data of each `t`.
pub fn arc_inequalities(
    pres: &Presentation,
    s: &Slope,
    side: u8,
    ts: &[PreimageSummary],
    tally: &mut ArcTally,
) -> Result<(), Error> {
    let graph = arc_preimage_graph(pres, s, side)?;
    let lat = pres.lattice();
    let deg = pres.degree();
    for comp in &graph.components {
        let path = graph.path(comp);
        let marked: Vec<(usize, _)> = path
            .iter()
            .enumerate()
            .filter_map(|(j, p)| {
                let k = lat.gamma_key_int(p);
                graph.vertices.iter().find(|v| v.key == k).and_then(|v| v.postcritical).map(|c| (j, c))
            })
            .collect();
        // core arcs between consecutive marked vertices, None where the run breaks
        let mut pieces: Vec<Option<(usize, Slope)>> = Vec::new();
        for w in marked.windows(2) {
            let ((j0, c0), (j1, c1)) = (w[0], w[1]);
            if c0 == c1 {
                pieces.push(None);
                continue;
            }
            match arc_slope(pres, s, &path[j0], &path[j1]) {
                Ok(Some(sigma)) => pieces.push(Some((j1 - j0, sigma))),
                Ok(None) | Err(Error::DegenerateArcModel(_)) => {
                    tally.skipped += 1;
                    pieces.push(None);
                }
                Err(e) => return Err(e),
            }
        }
        for t in ts {
            let Some(mu_t) = t.mu.as_slope() else { continue };
            if t.c == 0 || &t.slope == s {
                continue;
            }
            let i_st = intersection_number(s, &t.slope);
            for a in 0..pieces.len() {
                let (mut edges, mut inter) = (0usize, BigInt::from(0));
                for piece in &pieces[a..] {
                    let Some((e, sigma)) = piece else { break };
                    edges += e;
                    inter += intersection_number(sigma, mu_t);
                    tally.checked += 1;
                    let ea = BigInt::from(edges);
                    // ι(α̃, δ̃)·c(t) ≤ d(α̃)·ι(s, t)
                    if &inter * BigInt::from(t.c) > &ea * &i_st {
                        tally.violations.push(format!("c-bound: s={s} t={} edges={edges} iota={inter}", t.slope));
                    }
                    // ι(α̃, δ̃) ≤ 2⌈d(α̃) d(t) ι(s, t) / (2 deg)⌉
                    let num = &ea * &t.d * &i_st;
                    let den = &deg * 2;
                    let ceil = (&num + &den - 1) / &den;
                    if inter > ceil * 2 {
                        tally.violations.push(format!("ceil-bound: s={s} t={} edges={edges} iota={inter}", t.slope));
                    }
                }
            }
        }
    }
    Ok(())
}
