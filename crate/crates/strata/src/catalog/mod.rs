//! Worked models: quantum-plane, quantum-GL₂ and quantum-2×2-matrix
//! stratifications with their inter-stratum maps, and the 36-element
//! H-prime poset of quantum SL₃ with its quantum-minor symmetries.
//!
//! Everything here is data transcribed from the standard presentations of
//! these algebras: torus-invariant prime posets, centers of the localized
//! quotients as (Laurent) polynomial rings, the intermediate subalgebras
//! for each comparable pair, and the `(f, g)` map pairs through them.

mod gl2;
mod m2;
mod quantum_plane;
pub mod sl3;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::commalg::{parse_poly, AlgMap, PolyRing};
use crate::poset::Poset;
use crate::qtorus::{CenterLattice, QTorus};
use crate::topology::{
    ComorphismPair, Space, StratificationData, TransferMap, TransferRule,
};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown example `{0}` (try one of: oq_k2, oq_gl2, oq_m2, oq_sl3_poset)")]
    UnknownExample(String),
    #[error("unknown label `{0}` in this model")]
    UnknownLabel(String),
    #[error("`{0}` is not one of the listed symmetry identities")]
    NotListedIdentity(String),
    #[error("bad quantum-minor label `{0}`")]
    BadMinor(String),
}

/// One comparable pair's worth of gluing data: the intermediate ring, the
/// map `f` into the upper stratum's center, the inclusion `g` into the
/// lower one's, and the arrow names used in the source diagrams.
#[derive(Debug, Clone)]
pub struct StratumLink {
    pub mid: PolyRing,
    pub f: AlgMap,
    pub g: AlgMap,
    pub f_label: &'static str,
    pub g_label: &'static str,
}

/// q-commutation data for one stratum: the localized quotient is a quantum
/// torus on `generators` with matrix `matrix`, and the stratum's coordinate
/// ring is the center, whose variables sit inside the torus at the listed
/// exponent vectors.
#[derive(Debug, Clone)]
pub struct StratumTorus {
    pub generators: Vec<&'static str>,
    pub matrix: Vec<Vec<i64>>,
    pub center_vars: Vec<(&'static str, Vec<i64>)>,
}

impl StratumTorus {
    pub fn torus(&self) -> QTorus {
        QTorus::new(self.generators.clone(), self.matrix.clone())
            .expect("catalog matrices are skew")
    }

    /// The lattice the stratum's ring presentation claims as center.
    pub fn expected_lattice(&self) -> CenterLattice {
        CenterLattice::from_vectors(
            self.generators.iter().map(|s| s.to_string()).collect(),
            self.center_vars.iter().map(|(_, v)| v.clone()).collect(),
        )
    }
}

/// A named catalog entry: poset, strata, links, generator labels, and
/// maximal-ideal templates (`p1`, `p2` are the scalar parameters).
#[derive(Debug, Clone)]
pub struct ExampleModel {
    pub name: String,
    pub poset: Poset,
    pub strata: BTreeMap<String, Space>,
    pub links: BTreeMap<(String, String), StratumLink>,
    pub hprime_generators: BTreeMap<String, Vec<String>>,
    pub max_ideal_templates: BTreeMap<String, Vec<&'static str>>,
    pub strata_tori: BTreeMap<String, StratumTorus>,
}

impl ExampleModel {
    /// Height of an H-prime = the number of stored generators.
    pub fn hprime_height(&self, label: &str) -> Result<usize, CatalogError> {
        self.hprime_generators
            .get(label)
            .map(Vec::len)
            .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
    }

    pub fn stratum(&self, label: &str) -> Result<&Space, CatalogError> {
        self.strata
            .get(label)
            .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
    }

    pub fn link(&self, lower: &str, upper: &str) -> Result<&StratumLink, CatalogError> {
        self.links
            .get(&(lower.to_string(), upper.to_string()))
            .ok_or_else(|| CatalogError::UnknownLabel(format!("({lower},{upper})")))
    }

    /// Assemble the gluing data with comorphism transfer maps.
    pub fn to_stratification(&self) -> StratificationData {
        let transfers = self
            .links
            .iter()
            .map(|((a, b), link)| {
                let pair = ComorphismPair::new(link.mid.clone(), link.f.clone(), link.g.clone())
                    .expect("catalog maps share their mid ring");
                (
                    (a.clone(), b.clone()),
                    TransferMap {
                        source: a.clone(),
                        target: b.clone(),
                        rule: TransferRule::Comorphism(pair),
                    },
                )
            })
            .collect();
        StratificationData {
            poset: self.poset.clone(),
            strata: self.strata.clone(),
            transfers,
        }
    }
}

/// Look up a catalog model by name.
pub fn example(name: &str) -> Result<ExampleModel, CatalogError> {
    match name {
        "oq_k2" => Ok(quantum_plane::model()),
        "oq_gl2" => Ok(gl2::model()),
        "oq_m2" => Ok(m2::model()),
        "oq_sl3_poset" => Ok(sl3::model()),
        other => Err(CatalogError::UnknownExample(other.to_string())),
    }
}

pub const EXAMPLE_NAMES: &[&str] = &["oq_k2", "oq_gl2", "oq_m2", "oq_sl3_poset"];

pub(crate) fn ring(spec: &[(&str, bool)]) -> PolyRing {
    PolyRing::new(spec.to_vec()).expect("catalog ring specs are valid")
}

pub(crate) fn amap(src: &PolyRing, tgt: &PolyRing, images: &[&str]) -> AlgMap {
    let imgs = images
        .iter()
        .map(|s| parse_poly(tgt, s).expect("catalog images parse"))
        .collect();
    AlgMap::new(src.clone(), tgt.clone(), imgs).expect("catalog maps are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_examples_load() {
        for name in EXAMPLE_NAMES {
            let m = example(name).unwrap();
            assert_eq!(&m.name, name);
            assert!(m.poset.is_valid());
        }
        assert!(example("nope").is_err());
    }

    #[test]
    fn heights_match_generator_counts() {
        let m = example("oq_gl2").unwrap();
        assert_eq!(m.hprime_height("0").unwrap(), 0);
        assert_eq!(m.hprime_height("bc").unwrap(), 2);
        assert!(m.hprime_height("zz").is_err());
        let m2 = example("oq_m2").unwrap();
        assert_eq!(m2.hprime_height("abcd").unwrap(), 4);
        assert_eq!(m2.hprime_height("D").unwrap(), 1);
    }
}
