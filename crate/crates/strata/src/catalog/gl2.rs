//! The quantum-GL₂ stratification: four H-primes 0 < b, c < bc.
//!
//! Standard generator abbreviations a, b, c, d and quantum determinant
//! D = ad − q·bc (invertible). Stratum centers:
//!
//! ```text
//! Z(A_0)  = k[t^{±1}, D^{±1}]   t = b·c⁻¹
//! Z(A_b)  = k[s^{±1}]           s = a·d
//! Z(A_c)  = k[s^{±1}]
//! Z(A_bc) = k[a^{±1}, d^{±1}]
//! ```
//!
//! Intermediate rings and map pairs for all five comparable pairs, with
//! the arrow names of the primitive-spectrum diagram: inclusions and
//! projections on the g side, multiplication `(α,δ) ↦ αδ` and boundary
//! maps `s ↦ (0, s)` on the f side.

use std::collections::BTreeMap;

use super::{amap, ring, ExampleModel, StratumLink, StratumTorus};
use crate::poset::Poset;
use crate::topology::Space;

pub(super) fn model() -> ExampleModel {
    let poset = Poset::from_covers(
        vec!["0", "b", "c", "bc"],
        &[("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")],
    )
    .unwrap();

    let z0 = ring(&[("t", true), ("D", true)]);
    let zb = ring(&[("s", true)]);
    let zc = ring(&[("s", true)]);
    let zbc = ring(&[("a", true), ("d", true)]);

    let mut strata = BTreeMap::new();
    strata.insert("0".to_string(), Space::variety("0", z0.clone()));
    strata.insert("b".to_string(), Space::variety("b", zb.clone()));
    strata.insert("c".to_string(), Space::variety("c", zc.clone()));
    strata.insert("bc".to_string(), Space::variety("bc", zbc.clone()));

    let mut links = BTreeMap::new();

    // (0, b): through k[t, D^{±1}]; f kills t and reads D as s = ad mod b
    let mid = ring(&[("t", false), ("D", true)]);
    links.insert(
        ("0".to_string(), "b".to_string()),
        StratumLink {
            f: amap(&mid, &zb, &["0", "s"]),
            g: amap(&mid, &z0, &["t", "D"]),
            mid,
            f_label: "(0,-)",
            g_label: "incl",
        },
    );

    // (0, c): through k[u, D^{±1}] with u = b⁻¹·c = t⁻¹
    let mid = ring(&[("u", false), ("D", true)]);
    links.insert(
        ("0".to_string(), "c".to_string()),
        StratumLink {
            f: amap(&mid, &zc, &["0", "s"]),
            g: amap(&mid, &z0, &["t^-1", "D"]),
            mid,
            f_label: "(0,-)",
            g_label: "incl",
        },
    );

    // (0, bc): through k[D^{±1}]; g projects onto the D coordinate, f is
    // multiplication since D ≡ ad mod ⟨b, c⟩
    let mid = ring(&[("D", true)]);
    links.insert(
        ("0".to_string(), "bc".to_string()),
        StratumLink {
            f: amap(&mid, &zbc, &["a*d"]),
            g: amap(&mid, &z0, &["D"]),
            mid,
            f_label: "mult",
            g_label: "pr2",
        },
    );

    // (b, bc) and (c, bc): through k[s^{±1}]; s = ad maps to the product
    for lower in ["b", "c"] {
        let mid = ring(&[("s", true)]);
        let z_lower = if lower == "b" { &zb } else { &zc };
        links.insert(
            (lower.to_string(), "bc".to_string()),
            StratumLink {
                f: amap(&mid, &zbc, &["a*d"]),
                g: amap(&mid, z_lower, &["s"]),
                mid,
                f_label: "mult",
                g_label: "id",
            },
        );
    }

    let mut hprime_generators = BTreeMap::new();
    hprime_generators.insert("0".to_string(), vec![]);
    hprime_generators.insert("b".to_string(), vec!["b".to_string()]);
    hprime_generators.insert("c".to_string(), vec!["c".to_string()]);
    hprime_generators.insert("bc".to_string(), vec!["b".to_string(), "c".to_string()]);

    // maximal ideals of the stratum rings, in stratum coordinates
    // (⟨b−λc, D−μ⟩ reads as ⟨t−λ, D−μ⟩ since b−λc = c·(t−λ) after
    // inverting c)
    let mut max_ideal_templates = BTreeMap::new();
    max_ideal_templates.insert("0".to_string(), vec!["t - p1", "D - p2"]);
    max_ideal_templates.insert("b".to_string(), vec!["s - p1"]);
    max_ideal_templates.insert("c".to_string(), vec!["s - p1"]);
    max_ideal_templates.insert("bc".to_string(), vec!["a - p1", "d - p2"]);

    let mut strata_tori = BTreeMap::new();
    // relations: ab = q ba, ac = q ca, bc = cb, D central
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
    // mod ⟨b, c⟩: commutative
    strata_tori.insert(
        "bc".to_string(),
        StratumTorus {
            generators: vec!["a", "d"],
            matrix: vec![vec![0, 0], vec![0, 0]],
            center_vars: vec![("a", vec![1, 0]), ("d", vec![0, 1])],
        },
    );

    ExampleModel {
        name: "oq_gl2".to_string(),
        poset,
        strata,
        links,
        hprime_generators,
        max_ideal_templates,
        strata_tori,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::example;
    use crate::commalg::{parse_poly, rat, Ideal};
    use crate::topology::ClosedSet;

    #[test]
    fn poset_is_the_diamond() {
        let m = example("oq_gl2").unwrap();
        let covers = m.poset.covers().unwrap();
        assert_eq!(covers.len(), 4);
        assert!(m.poset.leq("0", "bc").unwrap());
        assert!(!m.poset.leq("b", "c").unwrap());
        // five strictly comparable pairs, all carrying links
        assert_eq!(m.poset.strict_pairs().len(), 5);
        assert_eq!(m.links.len(), 5);
    }

    #[test]
    fn figure_arrow_labels() {
        let m = example("oq_gl2").unwrap();
        assert_eq!(m.link("0", "b").unwrap().f_label, "(0,-)");
        assert_eq!(m.link("0", "b").unwrap().g_label, "incl");
        assert_eq!(m.link("0", "bc").unwrap().f_label, "mult");
        assert_eq!(m.link("0", "bc").unwrap().g_label, "pr2");
        assert_eq!(m.link("b", "bc").unwrap().g_label, "id");
    }

    /// V(D−μ) on the dense stratum hits the b-stratum in the single point
    /// s = μ; V(t−λ) misses it entirely.
    #[test]
    fn transfer_to_b_stratum() {
        let m = example("oq_gl2").unwrap();
        let data = m.to_stratification();
        let s0 = data.stratum("0").unwrap();
        let sb = data.stratum("b").unwrap();
        let tm = &data.transfers[&("0".to_string(), "b".to_string())];
        let ring0 = s0.ring().unwrap();

        let dmu = ClosedSet::Variety(Ideal::new(
            ring0.clone(),
            vec![parse_poly(ring0, "D - 5").unwrap()],
        ));
        let img = tm.apply(&dmu, s0, sb).unwrap();
        assert_eq!(img, ClosedSet::points(vec![vec![rat(5, 1)]]));

        let tlam = ClosedSet::Variety(Ideal::new(
            ring0.clone(),
            vec![parse_poly(ring0, "t - 3").unwrap()],
        ));
        let img = tm.apply(&tlam, s0, sb).unwrap();
        assert!(img.is_empty_set(sb).unwrap());
    }

    /// Whole-stratum closures have the shape cl(S_J) = ⋃_{K ≥ J} S_K.
    #[test]
    fn whole_stratum_closures() {
        let m = example("oq_gl2").unwrap();
        let data = m.to_stratification();
        for j in ["0", "b", "c", "bc"] {
            let closure = data.glued_closure(j, &ClosedSet::Whole).unwrap();
            for k in ["0", "b", "c", "bc"] {
                let expect_whole = m.poset.leq(j, k).unwrap();
                let space = data.stratum(k).unwrap();
                assert_eq!(
                    closure[k].is_whole_set(space).unwrap(),
                    expect_whole,
                    "closure of {j} at {k}"
                );
                if !expect_whole {
                    assert!(closure[k].is_empty_set(space).unwrap());
                }
            }
        }
    }
}
