//! The quantum 2×2 matrix algebra: fourteen H-primes and their strata.
//!
//! Generators a, b, c, d, quantum determinant D = ad − q·bc (not
//! invertible here, so ⟨D⟩ is itself an H-prime, labeled `D`). The poset
//! is the fourteen-element diagram with 27 cover pairs; stratum centers:
//!
//! ```text
//! abcd:               k
//! abd, abc, bcd, acd: k[c^{±1}], k[d^{±1}], k[a^{±1}], k[b^{±1}]
//! ab, bd, ac, cd:     k          bc: k[a^{±1}, d^{±1}]
//! b, c:               k[s^{±1}]  (s = a·d)      D: k[v^{±1}]  (v = b·c⁻¹)
//! 0:                  k[t^{±1}, D^{±1}]  (t = b·c⁻¹)
//! ```
//!
//! The intermediate ring of a cover pair (J, K) is the center of the
//! localization of A/J at the denominators avoiding K; concretely it drops
//! the invertibility of whichever center coordinate degenerates on K, so
//! that the closure direction appears as the new boundary point and `f`
//! evaluates there (or multiplies out, where the pair joins b/c/bc-style
//! strata). Pairs out of the four strata with center k carry the unique
//! maps from the one-point space.

use std::collections::BTreeMap;

use super::{amap, ring, ExampleModel, StratumLink, StratumTorus};
use crate::commalg::PolyRing;
use crate::poset::Poset;
use crate::topology::Space;

const COVERS: &[(&str, &str)] = &[
    ("0", "b"),
    ("0", "D"),
    ("0", "c"),
    ("b", "ab"),
    ("b", "bd"),
    ("b", "bc"),
    ("D", "ab"),
    ("D", "bd"),
    ("D", "ac"),
    ("D", "cd"),
    ("c", "bc"),
    ("c", "ac"),
    ("c", "cd"),
    ("ab", "abd"),
    ("ab", "abc"),
    ("bd", "abd"),
    ("bd", "bcd"),
    ("bc", "abc"),
    ("bc", "bcd"),
    ("ac", "abc"),
    ("ac", "acd"),
    ("cd", "bcd"),
    ("cd", "acd"),
    ("abd", "abcd"),
    ("abc", "abcd"),
    ("bcd", "abcd"),
    ("acd", "abcd"),
];

const LABELS: &[&str] = &[
    "0", "b", "D", "c", "ab", "bd", "bc", "ac", "cd", "abd", "abc", "bcd", "acd", "abcd",
];

fn stratum_ring(label: &str) -> PolyRing {
    match label {
        "0" => ring(&[("t", true), ("D", true)]),
        "b" | "c" => ring(&[("s", true)]),
        "D" => ring(&[("v", true)]),
        "bc" => ring(&[("a", true), ("d", true)]),
        "abd" => ring(&[("c", true)]),
        "abc" => ring(&[("d", true)]),
        "bcd" => ring(&[("a", true)]),
        "acd" => ring(&[("b", true)]),
        "ab" | "bd" | "ac" | "cd" | "abcd" => ring(&[]),
        other => unreachable!("no stratum ring for {other}"),
    }
}

pub(super) fn model() -> ExampleModel {
    let poset = Poset::from_covers(LABELS.to_vec(), COVERS).unwrap();

    let mut strata = BTreeMap::new();
    for &label in LABELS {
        strata.insert(label.to_string(), Space::variety(label, stratum_ring(label)));
    }

    let mut links: BTreeMap<(String, String), StratumLink> = BTreeMap::new();
    let mut add = |lower: &str,
                   upper: &str,
                   mid: PolyRing,
                   f_images: &[&str],
                   g_images: &[&str],
                   f_label: &'static str,
                   g_label: &'static str| {
        let f = amap(&mid, &stratum_ring(upper), f_images);
        let g = amap(&mid, &stratum_ring(lower), g_images);
        links.insert(
            (lower.to_string(), upper.to_string()),
            StratumLink { mid, f, g, f_label, g_label },
        );
    };

    // out of the dense stratum (as for quantum GL₂, plus the D direction,
    // where t stays invertible and D itself picks up its zero locus)
    add("0", "b", ring(&[("t", false), ("D", true)]), &["0", "s"], &["t", "D"], "(0,-)", "incl");
    add("0", "c", ring(&[("u", false), ("D", true)]), &["0", "s"], &["t^-1", "D"], "(0,-)", "incl");
    add("0", "D", ring(&[("t", true), ("D", false)]), &["v", "0"], &["t", "D"], "(-,0)", "incl");

    // out of the b- and c-strata: closing a or d off makes s = ad
    // degenerate (center k above), closing the other of b/c multiplies out
    add("b", "ab", ring(&[("s", false)]), &["0"], &["s"], "0", "incl");
    add("b", "bd", ring(&[("s", false)]), &["0"], &["s"], "0", "incl");
    add("b", "bc", ring(&[("s", true)]), &["a*d"], &["s"], "mult", "id");
    add("c", "ac", ring(&[("s", false)]), &["0"], &["s"], "0", "incl");
    add("c", "cd", ring(&[("s", false)]), &["0"], &["s"], "0", "incl");
    add("c", "bc", ring(&[("s", true)]), &["a*d"], &["s"], "mult", "id");

    // out of the determinant stratum: v = b·c⁻¹ loses invertibility of b
    // towards ab/bd and of c towards ac/cd (where the coordinate is v⁻¹)
    add("D", "ab", ring(&[("v", false)]), &["0"], &["v"], "0", "incl");
    add("D", "bd", ring(&[("v", false)]), &["0"], &["v"], "0", "incl");
    add("D", "ac", ring(&[("u", false)]), &["0"], &["v^-1"], "0", "incl");
    add("D", "cd", ring(&[("u", false)]), &["0"], &["v^-1"], "0", "incl");

    // out of the commutative bc-stratum: one matrix entry at a time
    add("bc", "abc", ring(&[("a", false), ("d", true)]), &["0", "d"], &["a", "d"], "(0,-)", "incl");
    add("bc", "bcd", ring(&[("a", true), ("d", false)]), &["a", "0"], &["a", "d"], "(-,0)", "incl");

    // out of the four point strata: unique maps from the one-point space
    for (lower, upper) in [
        ("ab", "abd"),
        ("ab", "abc"),
        ("bd", "abd"),
        ("bd", "bcd"),
        ("ac", "abc"),
        ("ac", "acd"),
        ("cd", "bcd"),
        ("cd", "acd"),
    ] {
        add(lower, upper, ring(&[]), &[], &[], "!", "!");
    }

    // 1-dimensional strata closing onto the top point
    add("abd", "abcd", ring(&[("c", false)]), &["0"], &["c"], "0", "incl");
    add("abc", "abcd", ring(&[("d", false)]), &["0"], &["d"], "0", "incl");
    add("bcd", "abcd", ring(&[("a", false)]), &["0"], &["a"], "0", "incl");
    add("acd", "abcd", ring(&[("b", false)]), &["0"], &["b"], "0", "incl");

    let mut hprime_generators = BTreeMap::new();
    for &label in LABELS {
        let gens = if label == "0" {
            vec![]
        } else {
            label.chars().map(|ch| ch.to_string()).collect()
        };
        hprime_generators.insert(label.to_string(), gens);
    }

    // maximal ideals of each stratum ring, in stratum coordinates; the
    // four point strata and the top have the zero ideal
    let mut max_ideal_templates: BTreeMap<String, Vec<&'static str>> = BTreeMap::new();
    max_ideal_templates.insert("0".to_string(), vec!["t - p1", "D - p2"]);
    max_ideal_templates.insert("b".to_string(), vec!["s - p1"]);
    max_ideal_templates.insert("c".to_string(), vec!["s - p1"]);
    max_ideal_templates.insert("D".to_string(), vec!["v - p1"]);
    max_ideal_templates.insert("bc".to_string(), vec!["a - p1", "d - p2"]);
    max_ideal_templates.insert("abd".to_string(), vec!["c - p1"]);
    max_ideal_templates.insert("abc".to_string(), vec!["d - p1"]);
    max_ideal_templates.insert("bcd".to_string(), vec!["a - p1"]);
    max_ideal_templates.insert("acd".to_string(), vec!["b - p1"]);
    for label in ["ab", "bd", "ac", "cd", "abcd"] {
        max_ideal_templates.insert(label.to_string(), vec![]);
    }

    let mut strata_tori = BTreeMap::new();
    // with D adjoined as a central generator: ab = q ba, ac = q ca, bc = cb
    strata_tori.insert(
        "0".to_string(),
        StratumTorus {
            generators: vec!["a", "b", "c", "D"],
            matrix: vec![
                vec![0, 1, 1, 0],
                vec![-1, 0, 0, 0],
                vec![-1, 0, 0, 0],
                vec![0, 0, 0, 0],
            ],
            center_vars: vec![("t", vec![0, 1, -1, 0]), ("D", vec![0, 0, 0, 1])],
        },
    );
    // mod b: ac = q ca, cd = q dc, ad = da
    strata_tori.insert(
        "b".to_string(),
        StratumTorus {
            generators: vec!["a", "c", "d"],
            matrix: vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]],
            center_vars: vec![("s", vec![1, 0, 1])],
        },
    );
    // mod c: ab = q ba, bd = q db, ad = da
    strata_tori.insert(
        "c".to_string(),
        StratumTorus {
            generators: vec!["a", "b", "d"],
            matrix: vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]],
            center_vars: vec![("s", vec![1, 0, 1])],
        },
    );
    // mod D: d = q·a⁻¹bc, leaving ab = q ba, ac = q ca, bc = cb
    strata_tori.insert(
        "D".to_string(),
        StratumTorus {
            generators: vec!["a", "b", "c"],
            matrix: vec![vec![0, 1, 1], vec![-1, 0, 0], vec![-1, 0, 0]],
            center_vars: vec![("v", vec![0, 1, -1])],
        },
    );
    strata_tori.insert(
        "bc".to_string(),
        StratumTorus {
            generators: vec!["a", "d"],
            matrix: vec![vec![0, 0], vec![0, 0]],
            center_vars: vec![("a", vec![1, 0]), ("d", vec![0, 1])],
        },
    );
    // the quantum-plane quotients: center k
    for (label, gens) in [
        ("ab", vec!["c", "d"]),
        ("bd", vec!["a", "c"]),
        ("ac", vec!["b", "d"]),
        ("cd", vec!["a", "b"]),
    ] {
        strata_tori.insert(
            label.to_string(),
            StratumTorus {
                generators: gens,
                matrix: vec![vec![0, 1], vec![-1, 0]],
                center_vars: vec![],
            },
        );
    }
    for (label, gen) in [("abd", "c"), ("abc", "d"), ("bcd", "a"), ("acd", "b")] {
        strata_tori.insert(
            label.to_string(),
            StratumTorus {
                generators: vec![gen],
                matrix: vec![vec![0]],
                center_vars: vec![(gen, vec![1])],
            },
        );
    }
    strata_tori.insert(
        "abcd".to_string(),
        StratumTorus { generators: vec![], matrix: vec![], center_vars: vec![] },
    );

    ExampleModel {
        name: "oq_m2".to_string(),
        poset,
        strata,
        links,
        hprime_generators,
        max_ideal_templates,
        strata_tori,
    }
}
