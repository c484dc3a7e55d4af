//! The 36 H-primes of quantum SL₃: generators by quantum minors, heights,
//! and the three standard symmetries on minor labels.
//!
//! H-primes are indexed by pairs of S₃ permutations in one-line notation,
//! `Q_{w+,w−}` with label `"w+,w-"` (e.g. `"312,132"`). Each one is
//! generated by quantum minors `[I|J]`: a below-diagonal batch determined
//! by `w+` and an above-diagonal batch determined by `w−`. The height of
//! an H-prime equals its number of generators, which is
//! `(3−ℓ(w+)) + (3−ℓ(w−))` in terms of permutation length. Containment of
//! H-primes is componentwise reverse Bruhat order; in S₃ that is simply
//! comparison of the levels `3−ℓ`. (Containment holds at ideal level — a
//! 2×2 minor lies in the ideal of the two matrix entries it straddles —
//! not always at the level of label sets.)

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{CatalogError, ExampleModel};
use crate::poset::Poset;

/// A quantum minor `[I|J]`: equal-size row and column subsets of {1,2,3}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MinorLabel {
    rows: Vec<u8>,
    cols: Vec<u8>,
}

impl MinorLabel {
    pub fn new(rows: &[u8], cols: &[u8]) -> Result<Self, CatalogError> {
        let mut rows = rows.to_vec();
        let mut cols = cols.to_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        let ok = |v: &[u8]| {
            !v.is_empty()
                && v.len() <= 3
                && v.iter().all(|&x| (1..=3).contains(&x))
                && v.windows(2).all(|w| w[0] < w[1])
        };
        if !ok(&rows) || !ok(&cols) || rows.len() != cols.len() {
            return Err(CatalogError::BadMinor(format!("[{rows:?}|{cols:?}]")));
        }
        Ok(MinorLabel { rows, cols })
    }

    pub fn rows(&self) -> &[u8] {
        &self.rows
    }

    pub fn cols(&self) -> &[u8] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

impl fmt::Display for MinorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = |v: &[u8]| v.iter().map(|d| d.to_string()).collect::<String>();
        write!(f, "[{}|{}]", digits(&self.rows), digits(&self.cols))
    }
}

impl FromStr for MinorLabel {
    type Err = CatalogError;

    /// Parse `[13|23]`-style labels.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::BadMinor(s.to_string());
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let (r, c) = inner.split_once('|').ok_or_else(bad)?;
        let digits = |t: &str| -> Result<Vec<u8>, CatalogError> {
            t.chars()
                .map(|ch| ch.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect()
        };
        MinorLabel::new(&digits(r)?, &digits(c)?)
    }
}

/// The three symmetries acting on quantum-minor labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// transpose automorphism: `[I|J] ↦ [J|I]`
    Transpose,
    /// antipode: `[I|J] ↦ [J̃|Ĩ]` with complements in {1,2,3} (the unit
    /// scalar in front is dropped — ideals do not see it)
    Antipode,
    /// the reversal anti-automorphism: `[I|J] ↦ [w₀(J)|w₀(I)]` with
    /// `w₀ = (3,2,1)`, i.e. 1 ↔ 3 elementwise
    Reversal,
}

impl FromStr for Symmetry {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tau" => Ok(Symmetry::Transpose),
            "S" => Ok(Symmetry::Antipode),
            "rho" => Ok(Symmetry::Reversal),
            other => Err(CatalogError::BadMinor(format!("unknown symmetry `{other}`"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symmetry::Transpose => "tau",
            Symmetry::Antipode => "S",
            Symmetry::Reversal => "rho",
        };
        write!(f, "{s}")
    }
}

fn complement(v: &[u8]) -> Vec<u8> {
    (1..=3).filter(|x| !v.contains(x)).collect()
}

fn reverse_elements(v: &[u8]) -> Vec<u8> {
    v.iter().map(|&x| 4 - x).collect()
}

/// Apply a symmetry to a quantum-minor label. The antipode flips sizes
/// 1 ↔ 2 and is not defined on the full 3×3 minor (its image would be the
/// empty minor — in SL₃ that is the identity, which is not a label).
pub fn minor_symmetry(sym: Symmetry, m: &MinorLabel) -> Result<MinorLabel, CatalogError> {
    match sym {
        Symmetry::Transpose => MinorLabel::new(&m.cols, &m.rows),
        Symmetry::Antipode => MinorLabel::new(&complement(&m.cols), &complement(&m.rows)),
        Symmetry::Reversal => {
            MinorLabel::new(&reverse_elements(&m.cols), &reverse_elements(&m.rows))
        }
    }
}

/// One-line S₃ permutations in the fixed display order.
pub const PERMS: &[&str] = &["321", "231", "312", "132", "213", "123"];

/// `3 − length`: 321 ↦ 0, 231/312 ↦ 1, 132/213 ↦ 2, 123 ↦ 3.
fn level(w: &str) -> Result<usize, CatalogError> {
    match w {
        "321" => Ok(0),
        "231" | "312" => Ok(1),
        "132" | "213" => Ok(2),
        "123" => Ok(3),
        other => Err(CatalogError::UnknownLabel(other.to_string())),
    }
}

/// Reverse Bruhat order on S₃: in this rank the Bruhat order is graded
/// with full relations between consecutive levels, so comparison reduces
/// to the levels.
fn factor_leq(w: &str, v: &str) -> Result<bool, CatalogError> {
    Ok(w == v || level(w)? < level(v)?)
}

fn minors(labels: &[&str]) -> Vec<MinorLabel> {
    labels.iter().map(|s| s.parse().expect("static labels parse")).collect()
}

/// The above-diagonal generator batch contributed by `w−`.
fn col_batch(w: &str) -> Result<Vec<MinorLabel>, CatalogError> {
    Ok(match w {
        "321" => vec![],
        "231" => minors(&["[12|23]"]),
        "312" => minors(&["[1|3]"]),
        "132" => minors(&["[1|2]", "[1|3]"]),
        "213" => minors(&["[1|3]", "[2|3]"]),
        "123" => minors(&["[1|2]", "[1|3]", "[2|3]"]),
        other => return Err(CatalogError::UnknownLabel(other.to_string())),
    })
}

/// The below-diagonal generator batch contributed by `w+`. This is the
/// transpose of the above-diagonal batch of the *inverse* permutation
/// (231 and 312 are mutually inverse, the rest are involutions).
fn row_batch(w: &str) -> Result<Vec<MinorLabel>, CatalogError> {
    Ok(match w {
        "321" => vec![],
        "231" => minors(&["[3|1]"]),
        "312" => minors(&["[23|12]"]),
        "132" => minors(&["[2|1]", "[3|1]"]),
        "213" => minors(&["[3|1]", "[3|2]"]),
        "123" => minors(&["[2|1]", "[3|1]", "[3|2]"]),
        other => return Err(CatalogError::UnknownLabel(other.to_string())),
    })
}

/// Generators of `Q_{w+,w−}`, sorted.
pub fn hprime_generators(w_plus: &str, w_minus: &str) -> Result<Vec<MinorLabel>, CatalogError> {
    let mut out = row_batch(w_plus)?;
    out.extend(col_batch(w_minus)?);
    out.sort();
    Ok(out)
}

/// Label of an H-prime, `"w+,w-"`.
pub fn hprime_label(w_plus: &str, w_minus: &str) -> String {
    format!("{w_plus},{w_minus}")
}

fn split_label(label: &str) -> Result<(&str, &str), CatalogError> {
    label
        .split_once(',')
        .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
}

/// The full 36-element H-prime poset with componentwise order.
pub fn poset() -> Poset {
    let mut elements = Vec::new();
    for wp in PERMS {
        for wm in PERMS {
            elements.push(hprime_label(wp, wm));
        }
    }
    let mut pairs = Vec::new();
    for wp in PERMS {
        for wm in PERMS {
            for vp in PERMS {
                for vm in PERMS {
                    if factor_leq(wp, vp).unwrap() && factor_leq(wm, vm).unwrap() {
                        pairs.push((hprime_label(wp, wm), hprime_label(vp, vm)));
                    }
                }
            }
        }
    }
    Poset::new(elements, &pairs).expect("static data")
}

/// The symmetry identities stated alongside the H-prime analysis whose
/// generator multisets map exactly onto the target's stored generators.
/// (The remaining stated identities hold at ideal level only: the image
/// generators generate the target ideal without being its display batch.)
pub fn listed_symmetry_instances() -> Vec<(Symmetry, String, String)> {
    vec![
        (Symmetry::Antipode, hprime_label("321", "231"), hprime_label("321", "312")),
        (Symmetry::Antipode, hprime_label("312", "321"), hprime_label("231", "321")),
        (Symmetry::Antipode, hprime_label("312", "231"), hprime_label("231", "312")),
        (Symmetry::Transpose, hprime_label("231", "231"), hprime_label("312", "312")),
        (Symmetry::Reversal, hprime_label("231", "231"), hprime_label("231", "231")),
        (Symmetry::Reversal, hprime_label("231", "132"), hprime_label("231", "213")),
    ]
}

/// Check one listed identity: apply the symmetry to every stored generator
/// of the source H-prime and compare the resulting multiset with the
/// target's stored generators. Identities not in the listed set are
/// rejected.
pub fn symmetry_instance_check(
    sym: Symmetry,
    source: &str,
    target: &str,
) -> Result<bool, CatalogError> {
    let listed = listed_symmetry_instances();
    if !listed
        .iter()
        .any(|(s, a, b)| *s == sym && a == source && b == target)
    {
        return Err(CatalogError::NotListedIdentity(format!(
            "{sym}({source}) = {target}"
        )));
    }
    let (sp, sm) = split_label(source)?;
    let (tp, tm) = split_label(target)?;
    let mut mapped = hprime_generators(sp, sm)?
        .iter()
        .map(|m| minor_symmetry(sym, m))
        .collect::<Result<Vec<_>, _>>()?;
    mapped.sort();
    Ok(mapped == hprime_generators(tp, tm)?)
}

/// The poset-and-labels-only model entry.
pub(super) fn model() -> ExampleModel {
    let poset = poset();
    let mut hprime_gens = BTreeMap::new();
    for wp in PERMS {
        for wm in PERMS {
            hprime_gens.insert(
                hprime_label(wp, wm),
                hprime_generators(wp, wm)
                    .expect("static data")
                    .iter()
                    .map(|m| m.to_string())
                    .collect(),
            );
        }
    }
    ExampleModel {
        name: "oq_sl3_poset".to_string(),
        poset,
        strata: BTreeMap::new(),
        links: BTreeMap::new(),
        hprime_generators: hprime_gens,
        max_ideal_templates: BTreeMap::new(),
        strata_tori: BTreeMap::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minor_label_parsing_and_validation() {
        let m: MinorLabel = "[13|23]".parse().unwrap();
        assert_eq!(m.to_string(), "[13|23]");
        assert!("[|2]".parse::<MinorLabel>().is_err());
        assert!("[12|3]".parse::<MinorLabel>().is_err()); // size mismatch
        assert!("[14|23]".parse::<MinorLabel>().is_err()); // out of range
        assert!(MinorLabel::new(&[1, 1], &[2, 3]).is_err()); // repeats
    }

    #[test]
    fn symmetry_formulas() {
        let m: MinorLabel = "[13|23]".parse().unwrap();
        assert_eq!(
            minor_symmetry(Symmetry::Transpose, &m).unwrap().to_string(),
            "[23|13]"
        );
        // antipode on a 1×1 minor: complements swap sides
        let x12: MinorLabel = "[1|2]".parse().unwrap();
        assert_eq!(
            minor_symmetry(Symmetry::Antipode, &x12).unwrap().to_string(),
            "[13|23]"
        );
        // reversal example: [12|13] ↦ [w₀(13)|w₀(12)] = [13|23]
        let m: MinorLabel = "[12|13]".parse().unwrap();
        assert_eq!(
            minor_symmetry(Symmetry::Reversal, &m).unwrap().to_string(),
            "[13|23]"
        );
        // antipode of the determinant is not a minor
        let det: MinorLabel = "[123|123]".parse().unwrap();
        assert!(minor_symmetry(Symmetry::Antipode, &det).is_err());
    }

    #[test]
    fn generator_counts_match_levels() {
        for wp in PERMS {
            for wm in PERMS {
                let gens = hprime_generators(wp, wm).unwrap();
                assert_eq!(
                    gens.len(),
                    level(wp).unwrap() + level(wm).unwrap(),
                    "Q_{{{wp},{wm}}}"
                );
            }
        }
        // the top: all six off-diagonal entries
        assert_eq!(hprime_generators("123", "123").unwrap().len(), 6);
        // the bottom: the zero ideal
        assert!(hprime_generators("321", "321").unwrap().is_empty());
    }

    #[test]
    fn poset_has_36_elements_and_expected_covers() {
        let p = poset();
        assert_eq!(p.len(), 36);
        assert!(p.is_valid());
        // covers of (231,231) are exactly the four height-3 primes above it
        let covers = p.covers().unwrap();
        let above: Vec<&(String, String)> = covers
            .iter()
            .filter(|(a, _)| a == "231,231")
            .collect();
        let mut targets: Vec<&str> = above.iter().map(|(_, b)| b.as_str()).collect();
        targets.sort();
        assert_eq!(targets, vec!["132,231", "213,231", "231,132", "231,213"]);
        // 8 covers per factor, 6 elements in the other: 96 in total
        assert_eq!(covers.len(), 96);
    }

    #[test]
    fn listed_identities_all_pass() {
        for (sym, src, tgt) in listed_symmetry_instances() {
            assert!(
                symmetry_instance_check(sym, &src, &tgt).unwrap(),
                "{sym}({src}) = {tgt}"
            );
        }
    }

    #[test]
    fn unlisted_identity_rejected() {
        let err = symmetry_instance_check(
            Symmetry::Antipode,
            "132,231",
            "132,312",
        );
        assert!(matches!(err, Err(CatalogError::NotListedIdentity(_))));
    }

    #[test]
    fn ideal_level_antipode_images_generate_targets_differently() {
        // the stated antipode image of Q_{132,231} is {X13, [23|13], [23|12]},
        // which generates Q_{132,312} without matching its display batch
        let src = hprime_generators("132", "231").unwrap();
        let mut mapped: Vec<MinorLabel> = src
            .iter()
            .map(|m| minor_symmetry(Symmetry::Antipode, m).unwrap())
            .collect();
        mapped.sort();
        let expected: Vec<MinorLabel> = vec![
            "[1|3]".parse().unwrap(),
            "[23|12]".parse().unwrap(),
            "[23|13]".parse().unwrap(),
        ];
        assert_eq!(mapped, expected);
        assert_ne!(mapped, hprime_generators("132", "312").unwrap());
    }
}
