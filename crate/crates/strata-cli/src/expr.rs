//! The closed-set expression grammar used on the command line:
//!
//! ```text
//! expr   := "whole" | "empty" | "V(" poly { "," poly } ")" | "{" pts "}"
//! pts    := pt { ";" pt }
//! pt     := rational | "(" rational { "," rational } ")"
//! ```

use strata::commalg::{parse_poly, parse_rational, Ideal, Point, PolyRing};
use strata::topology::ClosedSet;

pub fn parse_closed_set(ring: &PolyRing, src: &str) -> Result<ClosedSet, String> {
    let s = src.trim();
    match s {
        "whole" => return Ok(ClosedSet::Whole),
        "empty" | "∅" => return Ok(ClosedSet::Empty),
        _ => {}
    }
    if let Some(inner) = s.strip_prefix("V(").and_then(|t| t.strip_suffix(')')) {
        let mut gens = Vec::new();
        for part in split_top_level(inner, ',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            gens.push(parse_poly(ring, part).map_err(|e| e.to_string())?);
        }
        return Ok(ClosedSet::Variety(Ideal::new(ring.clone(), gens)));
    }
    if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let mut pts: Vec<Point> = Vec::new();
        for part in split_top_level(inner, ';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let coords = if let Some(tuple) =
                part.strip_prefix('(').and_then(|t| t.strip_suffix(')'))
            {
                split_top_level(tuple, ',')
                    .iter()
                    .map(|c| parse_rational(c.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?
            } else {
                vec![parse_rational(part).map_err(|e| e.to_string())?]
            };
            if coords.len() != ring.n_vars() {
                return Err(format!(
                    "point `{part}` has {} coordinates, stratum has {} variables",
                    coords.len(),
                    ring.n_vars()
                ));
            }
            pts.push(coords);
        }
        return Ok(ClosedSet::points(pts));
    }
    Err(format!(
        "cannot parse closed set `{src}` (use whole, empty, V(...), or {{p1; p2}})"
    ))
}

/// Closed sets of finite strata are label sets: `whole`, `empty`, or
/// `{a, b}`.
pub fn parse_finite_set(src: &str) -> Result<ClosedSet, String> {
    let s = src.trim();
    match s {
        "whole" => return Ok(ClosedSet::Whole),
        "empty" | "∅" => return Ok(ClosedSet::Empty),
        _ => {}
    }
    if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let members: std::collections::BTreeSet<String> = inner
            .split(&[',', ';'][..])
            .map(|p| p.trim().to_string())
            .filter(|p| !p.is_empty())
            .collect();
        return Ok(ClosedSet::FiniteFamily(members));
    }
    Err(format!("cannot parse finite closed set `{src}`"))
}

/// Split on a separator, ignoring separators inside parentheses.
fn split_top_level(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(ch);
            }
            c if c == sep && depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_grammar() {
        let ring = PolyRing::laurent(vec!["t", "D"]).unwrap();
        assert!(matches!(parse_closed_set(&ring, "whole"), Ok(ClosedSet::Whole)));
        assert!(matches!(parse_closed_set(&ring, "empty"), Ok(ClosedSet::Empty)));
        let v = parse_closed_set(&ring, "V(D - 5, t - 1/2)").unwrap();
        assert!(matches!(v, ClosedSet::Variety(_)));
        let pts = parse_closed_set(&ring, "{(1, 2); (3/2, -1)}").unwrap();
        assert!(matches!(pts, ClosedSet::FinitePoints(p) if p.len() == 2));
        let one = PolyRing::laurent(vec!["y"]).unwrap();
        let single = parse_closed_set(&one, "{2}").unwrap();
        assert!(matches!(single, ClosedSet::FinitePoints(p) if p.len() == 1));
        assert!(parse_closed_set(&one, "{(1,2)}").is_err()); // dimension
        assert!(parse_closed_set(&one, "nonsense").is_err());
    }
}
