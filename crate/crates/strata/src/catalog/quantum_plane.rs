//! The quantum plane with its two-stratum primitive spectrum.
//!
//! Generators x, y with xy = q·yx. H-primes ⟨x⟩ < ⟨x, y⟩ (labels `x` and
//! `xy`). The lower stratum's primitive ideals are ⟨x, y−β⟩ for β ∈ k^×,
//! a punctured affine line with coordinate y; the upper stratum is the one
//! point ⟨x, y⟩. The transfer between them runs through the affine line
//! `max k[w]`: g reads off the coordinate β, f places the upper point at
//! the origin — so finite point sets transfer to ∅ (the origin is never a
//! β) while the whole lower stratum closes up onto the upper point.

use std::collections::BTreeMap;

use super::{amap, ring, ExampleModel, StratumLink, StratumTorus};
use crate::poset::Poset;
use crate::topology::Space;

pub(super) fn model() -> ExampleModel {
    let poset = Poset::new(vec!["x", "xy"], &[("x", "xy")]).unwrap();

    let lower_ring = ring(&[("y", true)]);
    let upper_ring = ring(&[]);
    let mut strata = BTreeMap::new();
    strata.insert("x".to_string(), Space::variety("x", lower_ring.clone()));
    strata.insert("xy".to_string(), Space::variety("xy", upper_ring.clone()));

    let mid = ring(&[("w", false)]);
    let g = amap(&mid, &lower_ring, &["y"]);
    let f = amap(&mid, &upper_ring, &["0"]);
    let mut links = BTreeMap::new();
    links.insert(
        ("x".to_string(), "xy".to_string()),
        StratumLink { mid, f, g, f_label: "0", g_label: "coord" },
    );

    let mut hprime_generators = BTreeMap::new();
    hprime_generators.insert("x".to_string(), vec!["x".to_string()]);
    hprime_generators.insert("xy".to_string(), vec!["x".to_string(), "y".to_string()]);

    let mut max_ideal_templates = BTreeMap::new();
    max_ideal_templates.insert("x".to_string(), vec!["y - p1"]);
    max_ideal_templates.insert("xy".to_string(), vec![]);

    let mut strata_tori = BTreeMap::new();
    strata_tori.insert(
        "x".to_string(),
        StratumTorus {
            generators: vec!["y"],
            matrix: vec![vec![0]],
            center_vars: vec![("y", vec![1])],
        },
    );
    strata_tori.insert(
        "xy".to_string(),
        StratumTorus { generators: vec![], matrix: vec![], center_vars: vec![] },
    );

    ExampleModel {
        name: "oq_k2".to_string(),
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
    use crate::commalg::rat;
    use crate::topology::ClosedSet;

    /// The displayed case split: finite point sets ↦ ∅, the whole stratum
    /// ↦ the upper point.
    #[test]
    fn transfer_case_split() {
        let m = example("oq_k2").unwrap();
        let data = m.to_stratification();
        let lower = data.stratum("x").unwrap();
        let upper = data.stratum("xy").unwrap();
        let tm = &data.transfers[&("x".to_string(), "xy".to_string())];

        let single = ClosedSet::points(vec![vec![rat(2, 1)]]);
        let img = tm.apply(&single, lower, upper).unwrap();
        assert!(img.is_empty_set(upper).unwrap());

        let img = tm.apply(&ClosedSet::Whole, lower, upper).unwrap();
        assert!(img.is_whole_set(upper).unwrap());
        assert_eq!(img.render(upper), "{xy}");
    }

    /// Two points placed in the lower stratum close up to themselves plus
    /// nothing above.
    #[test]
    fn glued_closure_of_two_points() {
        let m = example("oq_k2").unwrap();
        let data = m.to_stratification();
        let y = ClosedSet::points(vec![vec![rat(2, 1)], vec![rat(5, 1)]]);
        let closure = data.glued_closure("x", &y).unwrap();
        assert!(closure["xy"].is_empty_set(data.stratum("xy").unwrap()).unwrap());
        assert!(closure["x"].equiv(&y, data.stratum("x").unwrap()).unwrap());
    }
}
