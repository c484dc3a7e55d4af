//! DOT (Graphviz) emission for Hasse diagrams: one node per poset element,
//! one edge per cover pair, bottom-up rank direction. Output is sorted, so
//! identical inputs produce identical bytes.

use strata::poset::Poset;

pub fn hasse_dot(name: &str, poset: &Poset) -> Result<String, String> {
    let covers = poset.covers().map_err(|e| e.to_string())?;
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", sanitize(name)));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for e in poset.elements() {
        out.push_str(&format!("  \"{}\";\n", sanitize(e)));
    }
    for (a, b) in &covers {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", sanitize(a), sanitize(b)));
    }
    out.push_str("}\n");
    Ok(out)
}

fn sanitize(s: &str) -> String {
    s.replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_has_two_edges() {
        let p = Poset::from_covers(vec!["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        let dot = hasse_dot("chain", &p).unwrap();
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert_eq!(dot.matches(";\n").count(), 2 + 3 + 2); // edges + nodes + style lines
    }
}
