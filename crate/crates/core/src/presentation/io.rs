//! The line-oriented presentation file format.

use num_bigint::BigInt;

use super::{Corner, Green, Presentation};
use crate::error::{Error, Result};
use crate::exact::IVec2;

const HEADER: &str = "netmap-presentation v1";

pub fn serialize(p: &Presentation) -> String {
    let mut s = String::new();
    s.push_str(HEADER);
    s.push('\n');
    let v = |x: &IVec2| format!("{} {}", x.x, x.y);
    s.push_str(&format!("lambda1: {}\n", v(&p.lambda1)));
    s.push_str(&format!("lambda2: {}\n", v(&p.lambda2)));
    s.push_str(&format!("translation: {}\n", v(&p.translation)));
    for e in Corner::ALL {
        let g = match p.green(e) {
            Green::Trivial => "trivial".to_string(),
            Green::Far(z) => v(z),
        };
        s.push_str(&format!("green {}: {}\n", e.label(), g));
    }
    s
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, message: message.into() }
}

fn parse_vec(line: usize, text: &str) -> Result<IVec2> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(syntax(line, format!("expected two integers, found {text:?}")));
    }
    let n = |t: &str| t.parse::<BigInt>().map_err(|_| syntax(line, format!("bad integer {t:?}")));
    Ok(IVec2 { x: n(parts[0])?, y: n(parts[1])? })
}

/// Parses and validates a presentation file.
pub fn parse(text: &str) -> Result<Presentation> {
    let p = parse_unchecked(text)?;
    p.ensure_valid()?;
    Ok(p)
}

/// Parses without running the validator.
pub fn parse_unchecked(text: &str) -> Result<Presentation> {
    let mut header = false;
    let mut l1 = None;
    let mut l2 = None;
    let mut b = None;
    let mut green: [Option<Green>; 4] = [None, None, None, None];
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let t = raw.split('#').next().unwrap_or("").trim();
        if t.is_empty() {
            continue;
        }
        if !header {
            if t != HEADER {
                return Err(syntax(line, format!("expected header {HEADER:?}")));
            }
            header = true;
            continue;
        }
        let (key, val) = t
            .split_once(':')
            .ok_or_else(|| syntax(line, format!("expected 'key: value', found {t:?}")))?;
        let key = key.trim();
        let val = val.trim();
        let slot = match key {
            "lambda1" => &mut l1,
            "lambda2" => &mut l2,
            "translation" => &mut b,
            _ => {
                let label = key
                    .strip_prefix("green")
                    .map(str::trim)
                    .ok_or_else(|| syntax(line, format!("unknown key {key:?}")))?;
                let e = Corner::ALL
                    .into_iter()
                    .find(|e| e.label() == label)
                    .ok_or_else(|| syntax(line, format!("unknown corner {label:?}")))?;
                if green[e.index()].is_some() {
                    return Err(syntax(line, format!("duplicate green {label}")));
                }
                green[e.index()] = Some(if val == "trivial" {
                    Green::Trivial
                } else {
                    Green::Far(parse_vec(line, val)?)
                });
                continue;
            }
        };
        if slot.is_some() {
            return Err(syntax(line, format!("duplicate {key}")));
        }
        *slot = Some(parse_vec(line, val)?);
    }
    if !header {
        return Err(syntax(last.max(1), format!("missing header {HEADER:?}")));
    }
    let end = last + 1;
    let need = |x: Option<IVec2>, name: &str| x.ok_or_else(|| syntax(end, format!("missing {name} line")));
    let lambda1 = need(l1, "lambda1")?;
    let lambda2 = need(l2, "lambda2")?;
    let translation = need(b, "translation")?;
    let mut gs = Vec::with_capacity(4);
    for e in Corner::ALL {
        let g = green[e.index()]
            .take()
            .ok_or_else(|| syntax(end, format!("missing green {} line", e.label())))?;
        gs.push(g);
    }
    let green: [Green; 4] = gs.try_into().expect("four greens");
    Ok(Presentation { lambda1, lambda2, translation, green })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{family_fn, Violation};

    #[test]
    fn round_trip() {
        for n in 4..=8 {
            let p = family_fn(n).unwrap();
            assert_eq!(parse(&serialize(&p)).unwrap(), p);
        }
    }

    #[test]
    fn missing_green() {
        let text = serialize(&family_fn(5).unwrap());
        let cut: String = text.lines().filter(|l| !l.starts_with("green 11")).map(|l| format!("{l}\n")).collect();
        match parse(&cut) {
            Err(Error::Syntax { message, .. }) => assert!(message.contains("green 11"), "{message}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn singular_lattice_surfaces() {
        let text = serialize(&family_fn(5).unwrap()).replace("lambda1: 5 0", "lambda1: 0 0");
        assert_eq!(parse(&text), Err(Error::InvalidPresentation(vec![Violation::SingularLattice])));
    }

    #[test]
    fn comments_and_errors() {
        let text = format!("# f5\n{}", serialize(&family_fn(5).unwrap()));
        assert!(parse(&text).is_ok());
        let bad = text.replace("translation: 5 0", "translation: 5");
        assert!(matches!(parse(&bad), Err(Error::Syntax { line: 5, .. })));
    }
}
