//! Stratification axioms, transfer maps between strata, and gluing.
//!
//! A finite stratification of a space T is a partition into nonempty
//! locally closed parts, indexed by a finite poset, such that the closure
//! of each part is the union of the parts above it. Each comparable pair
//! `i < j` carries a transfer map on closed sets, `Y ↦ cl(Y) ∩ S_j`, and a
//! subset `X ⊆ T` is closed exactly when every trace `X ∩ S_i` is closed
//! and the transfers push each trace into the next one. Running that
//! characterization backwards glues a topology out of per-stratum data —
//! that construction and its verification live here.

use std::collections::{BTreeMap, BTreeSet};

use super::sample::{sample_closed_sets, subspace_closed_family};
use super::set::{ClosedSet, Space};
use super::TopologyError;
use crate::commalg::{AlgMap, PolyRing};
use crate::poset::Poset;

/// A map `CL(S_source) → CL(S_target)` between the closed-set lattices of
/// two strata.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferMap {
    pub source: String,
    pub target: String,
    pub rule: TransferRule,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TransferRule {
    /// Explicit images on a generating family of closed sets, extended by
    /// unions.
    Table(Vec<(ClosedSet, ClosedSet)>),
    /// `Y ↦ f⁻¹(cl(g(Y)))` through a common intermediate affine piece.
    Comorphism(ComorphismPair),
}

/// The `(f, g)` pair of a comorphism-presented transfer: both algebra maps
/// go out of the same intermediate ring, `g` into the lower stratum's
/// coordinate ring (an inclusion in the worked models) and `f` into the
/// upper one's.
#[derive(Debug, Clone, PartialEq)]
pub struct ComorphismPair {
    pub mid: PolyRing,
    pub f: AlgMap,
    pub g: AlgMap,
}

impl ComorphismPair {
    pub fn new(mid: PolyRing, f: AlgMap, g: AlgMap) -> Result<Self, TopologyError> {
        if f.source() != &mid || g.source() != &mid {
            return Err(TopologyError::BadData(
                "comorphism maps must share the intermediate ring as source".into(),
            ));
        }
        Ok(ComorphismPair { mid, f, g })
    }
}

impl TransferMap {
    /// Apply to a closed set of the source stratum.
    pub fn apply(
        &self,
        y: &ClosedSet,
        source: &Space,
        target: &Space,
    ) -> Result<ClosedSet, TopologyError> {
        y.validate_in(source)?;
        match &self.rule {
            TransferRule::Table(entries) => {
                for (k, v) in entries {
                    if k.equiv(y, source)? {
                        return Ok(v.clone());
                    }
                }
                // extension by unions: cover y by table keys
                let mut covered: Option<ClosedSet> = None;
                let mut image: Option<ClosedSet> = None;
                for (k, v) in entries {
                    if k.subset_of(y, source)? {
                        covered = Some(match covered {
                            None => k.clone(),
                            Some(c) => c.union(k, source)?,
                        });
                        image = Some(match image {
                            None => v.clone(),
                            Some(i) => i.union(v, target)?,
                        });
                    }
                }
                let covered = covered.unwrap_or(ClosedSet::Empty);
                if covered.equiv(y, source)? {
                    Ok(image.unwrap_or(ClosedSet::Empty))
                } else {
                    Err(TopologyError::NotInTable(y.render(source)))
                }
            }
            TransferRule::Comorphism(pair) => {
                let ring = source.ring().ok_or_else(|| TopologyError::KindMismatch {
                    space: source.name().to_string(),
                    detail: "comorphism transfer out of a finite stratum".into(),
                })?;
                let ideal = y.to_ideal(ring)?;
                let mid_ideal = pair.g.contract(&ideal)?;
                let extended = pair.f.extend(&mid_ideal)?;
                let _ = target;
                Ok(ClosedSet::from_ideal(extended))
            }
        }
    }
}

/// A continuous map used as one leg of [`preimage_closure`]: either a point
/// table between finite spaces or the comorphism of an algebra map (an
/// algebra map `R → T` induces `Spec T → Spec R`).
#[derive(Debug, Clone, PartialEq)]
pub enum ContinuousMap {
    Finite {
        domain: Space,
        codomain: Space,
        table: BTreeMap<String, String>,
    },
    Comorphism(AlgMap),
}

/// `Y ↦ f⁻¹(cl(g(Y)))` for continuous maps `f : S′ → W`, `g : S → W` with a
/// common codomain. On algebraic data the closure of the image is
/// contraction along `g` and the preimage is extension along `f`; on finite
/// data everything is computed pointwise.
pub fn preimage_closure(
    f: &ContinuousMap,
    g: &ContinuousMap,
    y: &ClosedSet,
) -> Result<ClosedSet, TopologyError> {
    match (f, g) {
        (ContinuousMap::Comorphism(fa), ContinuousMap::Comorphism(ga)) => {
            if fa.source() != ga.source() {
                return Err(TopologyError::MismatchedCodomains(format!(
                    "{} vs {}",
                    fa.source(),
                    ga.source()
                )));
            }
            let ideal = y.to_ideal(ga.target())?;
            let mid = ga.contract(&ideal)?;
            Ok(ClosedSet::from_ideal(fa.extend(&mid)?))
        }
        (
            ContinuousMap::Finite { domain: fd, codomain: fc, table: ft },
            ContinuousMap::Finite { domain: gd, codomain: gc, table: gt },
        ) => {
            if fc != gc {
                return Err(TopologyError::MismatchedCodomains(format!(
                    "{} vs {}",
                    fc.name(),
                    gc.name()
                )));
            }
            let y_pts = y.materialize(gd)?;
            let mut image = BTreeSet::new();
            for p in &y_pts {
                let q = gt
                    .get(p)
                    .ok_or_else(|| TopologyError::BadData(format!("map misses point `{p}`")))?;
                image.insert(q.clone());
            }
            let closed_image = gc.closure(&image)?;
            let Space::Finite { points, .. } = fd else {
                return Err(TopologyError::MismatchedCodomains(
                    "finite table with non-finite domain".into(),
                ));
            };
            let mut preim = BTreeSet::new();
            for p in points {
                let q = ft
                    .get(p)
                    .ok_or_else(|| TopologyError::BadData(format!("map misses point `{p}`")))?;
                if closed_image.contains(q) {
                    preim.insert(p.clone());
                }
            }
            Ok(ClosedSet::FiniteFamily(preim))
        }
        _ => Err(TopologyError::MismatchedCodomains(
            "one leg is a point table, the other a comorphism".into(),
        )),
    }
}

/// Per-stratum spaces, the index poset, and transfer maps for (at least)
/// the cover pairs. Transfers for non-cover comparable pairs are stored
/// when given; closure computations saturate over whatever is present, so
/// chains work without assuming the transfers compose.
#[derive(Debug, Clone)]
pub struct StratificationData {
    pub poset: Poset,
    pub strata: BTreeMap<String, Space>,
    pub transfers: BTreeMap<(String, String), TransferMap>,
}

impl StratificationData {
    pub fn stratum(&self, label: &str) -> Result<&Space, TopologyError> {
        self.strata
            .get(label)
            .ok_or_else(|| TopologyError::UnknownStratum(label.to_string()))
    }

    /// Structural sanity: poset is a poset, strata match its elements,
    /// transfer keys are strictly comparable and cover pairs all have one,
    /// comorphism rings agree with the stratum rings.
    pub fn validate(&self) -> Result<(), TopologyError> {
        let violations = self.poset.validate();
        if let Some(first) = violations.first() {
            return Err(TopologyError::BadData(format!(
                "index relation is not a poset ({} violations, first: {first})",
                violations.len()
            )));
        }
        for e in self.poset.elements() {
            let space = self.stratum(e)?;
            space.validate()?;
        }
        for label in self.strata.keys() {
            if self.poset.index_of(label).is_none() {
                return Err(TopologyError::BadData(format!(
                    "stratum `{label}` is not a poset element"
                )));
            }
        }
        for ((a, b), tm) in &self.transfers {
            if tm.source != *a || tm.target != *b {
                return Err(TopologyError::BadData(format!(
                    "transfer stored under ({a},{b}) names {}→{}",
                    tm.source, tm.target
                )));
            }
            let ia = self
                .poset
                .index_of(a)
                .ok_or_else(|| TopologyError::UnknownStratum(a.clone()))?;
            let ib = self
                .poset
                .index_of(b)
                .ok_or_else(|| TopologyError::UnknownStratum(b.clone()))?;
            if !self.poset.lt_idx(ia, ib) {
                return Err(TopologyError::NotComparable(a.clone(), b.clone()));
            }
            if let TransferRule::Comorphism(pair) = &tm.rule {
                let src_ring = self.stratum(a)?.ring();
                let tgt_ring = self.stratum(b)?.ring();
                if src_ring != Some(pair.g.target()) {
                    return Err(TopologyError::BadData(format!(
                        "transfer {a}→{b}: g lands in {} but the stratum ring differs",
                        pair.g.target()
                    )));
                }
                if tgt_ring != Some(pair.f.target()) {
                    return Err(TopologyError::BadData(format!(
                        "transfer {a}→{b}: f lands in {} but the stratum ring differs",
                        pair.f.target()
                    )));
                }
            }
        }
        for (a, b) in self.poset.covers()? {
            if !self.transfers.contains_key(&(a.clone(), b.clone())) {
                return Err(TopologyError::BadData(format!(
                    "cover pair ({a},{b}) has no transfer map"
                )));
            }
        }
        Ok(())
    }

    /// The closedness test of the glued topology: every assigned trace is
    /// closed in its stratum and every stored transfer pushes each trace
    /// into the trace above. Missing entries count as ∅.
    pub fn is_glued_closed(
        &self,
        x: &BTreeMap<String, ClosedSet>,
    ) -> Result<bool, TopologyError> {
        let empty = ClosedSet::Empty;
        for e in self.poset.elements() {
            let xe = x.get(e).unwrap_or(&empty);
            if !xe.is_closed_in(self.stratum(e)?)? {
                return Ok(false);
            }
        }
        for ((a, b), tm) in &self.transfers {
            let xa = x.get(a).unwrap_or(&empty);
            let xb = x.get(b).unwrap_or(&empty);
            let img = tm.apply(xa, self.stratum(a)?, self.stratum(b)?)?;
            if !img.subset_of(xb, self.stratum(b)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest glued-closed family containing `y` placed in stratum
    /// `label`: seed there, push along every stored transfer, repeat until
    /// stable. No compatibility of transfer compositions is assumed.
    pub fn glued_closure(
        &self,
        label: &str,
        y: &ClosedSet,
    ) -> Result<BTreeMap<String, ClosedSet>, TopologyError> {
        let space = self.stratum(label)?;
        if !y.is_closed_in(space)? {
            return Err(TopologyError::NotClosedInStratum(label.to_string()));
        }
        let mut state: BTreeMap<String, ClosedSet> = self
            .poset
            .elements()
            .iter()
            .map(|e| (e.clone(), ClosedSet::Empty))
            .collect();
        state.insert(label.to_string(), y.clone());

        let max_rounds = self.poset.len() * self.poset.len() + self.transfers.len() + 3;
        for _ in 0..max_rounds {
            let mut changed = false;
            for ((a, b), tm) in &self.transfers {
                let img = tm.apply(&state[a], self.stratum(a)?, self.stratum(b)?)?;
                let merged = state[b].union(&img, self.stratum(b)?)?;
                if !merged.equiv(&state[b], self.stratum(b)?)? {
                    state.insert(b.clone(), merged);
                    changed = true;
                }
            }
            if !changed {
                return Ok(state);
            }
        }
        Err(TopologyError::BadData(
            "glued-closure saturation did not stabilize".into(),
        ))
    }
}

/// Axiom report for one transfer map: ∅ ↦ ∅, whole ↦ whole, and
/// preservation of finite unions on sampled pairs.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub failures: Vec<String>,
    pub checks: usize,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check the transfer-map axioms on the given sample of closed sets of the
/// source stratum (pass an exhaustive family for finite strata).
pub fn check_transfer_axioms(
    tm: &TransferMap,
    source: &Space,
    target: &Space,
    sets: &[ClosedSet],
) -> Result<AxiomReport, TopologyError> {
    let mut report = AxiomReport::default();
    let img_empty = tm.apply(&ClosedSet::Empty, source, target)?;
    report.checks += 1;
    if !img_empty.is_empty_set(target)? {
        report
            .failures
            .push(format!("∅ maps to {} instead of ∅", img_empty.render(target)));
    }
    let img_whole = tm.apply(&ClosedSet::Whole, source, target)?;
    report.checks += 1;
    if !img_whole.is_whole_set(target)? {
        report.failures.push(format!(
            "whole stratum maps to {} instead of the whole target",
            img_whole.render(target)
        ));
    }
    // union preservation on sampled pairs; images of the individual sets
    // are computed once and reused
    let images: Vec<Option<ClosedSet>> = sets
        .iter()
        .map(|y| match tm.apply(y, source, target) {
            Ok(v) => Ok(Some(v)),
            Err(TopologyError::NotInTable(_)) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_, _>>()?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..sets.len() {
        for j in (i + 1)..sets.len() {
            pairs.push((i, j));
        }
    }
    const PAIR_CAP: usize = 60;
    let stride = (pairs.len() / PAIR_CAP).max(1);
    for (i, j) in pairs.into_iter().step_by(stride) {
        let (Some(img_a), Some(img_b)) = (&images[i], &images[j]) else {
            continue; // a generating table may not span these
        };
        let a = &sets[i];
        let b = &sets[j];
        let union = a.union(b, source)?;
        let lhs = match tm.apply(&union, source, target) {
            Ok(v) => v,
            Err(TopologyError::NotInTable(_)) => continue,
            Err(e) => return Err(e),
        };
        let rhs = img_a.union(img_b, target)?;
        report.checks += 1;
        if !lhs.equiv(&rhs, target)? {
            report.failures.push(format!(
                "union not preserved on {} ∪ {}: {} vs {}",
                a.render(source),
                b.render(source),
                lhs.render(target),
                rhs.render(target)
            ));
        }
    }
    Ok(report)
}

/// Report of [`verify_stratification`]: one line per violated condition.
#[derive(Debug, Clone, Default)]
pub struct StratReport {
    pub problems: Vec<String>,
}

impl StratReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

fn check_partition(
    space: &Space,
    partition: &BTreeMap<String, BTreeSet<String>>,
) -> Result<(), TopologyError> {
    let Space::Finite { points, .. } = space else {
        return Err(TopologyError::KindMismatch {
            space: space.name().to_string(),
            detail: "stratification verification needs a finite space".into(),
        });
    };
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for (label, part) in partition {
        for p in part {
            if !points.contains(p) {
                return Err(TopologyError::NotAPartition(format!(
                    "part `{label}` contains unknown point `{p}`"
                )));
            }
            if !seen.insert(p.clone()) {
                return Err(TopologyError::NotAPartition(format!(
                    "point `{p}` lies in two parts"
                )));
            }
        }
    }
    if &seen != points {
        let missing: Vec<String> = points.difference(&seen).cloned().collect();
        return Err(TopologyError::NotAPartition(format!(
            "points not covered: {}",
            missing.join(", ")
        )));
    }
    Ok(())
}

/// Check that `partition`, indexed by `poset`, is a finite stratification
/// of the (finite) space: parts nonempty and locally closed, and the
/// closure of each part is exactly the union of the parts above it.
pub fn verify_stratification(
    space: &Space,
    partition: &BTreeMap<String, BTreeSet<String>>,
    poset: &Poset,
) -> Result<StratReport, TopologyError> {
    check_partition(space, partition)?;
    let mut report = StratReport::default();
    let labels: BTreeSet<&String> = partition.keys().collect();
    let poset_labels: BTreeSet<&String> = poset.elements().iter().collect();
    if labels != poset_labels {
        return Err(TopologyError::BadData(
            "partition labels and poset elements differ".into(),
        ));
    }
    for (label, part) in partition {
        if part.is_empty() {
            report.problems.push(format!("part `{label}` is empty"));
            continue;
        }
        if !space.is_locally_closed(part)? {
            report
                .problems
                .push(format!("part `{label}` is not locally closed"));
        }
        let closure = space.closure(part)?;
        let i = poset.index_of(label).expect("labels checked equal");
        let mut expected = BTreeSet::new();
        for j in poset.up_set(i) {
            let up_label = &poset.elements()[j];
            expected.extend(partition[up_label].iter().cloned());
        }
        if closure != expected {
            report.problems.push(format!(
                "closure of `{label}` is {closure:?}, union of parts above it is {expected:?}"
            ));
        }
    }
    Ok(report)
}

/// The order induced by closures: `i ≤ j ⟺ S_j ⊆ cl(S_i)`. Requires parts
/// nonempty, locally closed, with closures that are unions of parts; the
/// result is then automatically antisymmetric (two parts with the same
/// closure are both dense and open in it, hence meet, hence coincide).
pub fn induced_order(
    space: &Space,
    partition: &BTreeMap<String, BTreeSet<String>>,
) -> Result<Poset, TopologyError> {
    check_partition(space, partition)?;
    let mut closures: BTreeMap<&String, BTreeSet<String>> = BTreeMap::new();
    for (label, part) in partition {
        if part.is_empty() {
            return Err(TopologyError::BadPart(label.clone(), "empty".into()));
        }
        if !space.is_locally_closed(part)? {
            return Err(TopologyError::BadPart(label.clone(), "not locally closed".into()));
        }
        let cl = space.closure(part)?;
        // the closure must be a union of parts
        let mut rest = cl.clone();
        for q in partition.values() {
            if q.is_subset(&cl) {
                for p in q {
                    rest.remove(p);
                }
            }
        }
        if !rest.is_empty() {
            return Err(TopologyError::ClosureNotUnionOfParts(label.clone()));
        }
        closures.insert(label, cl);
    }
    let labels: Vec<String> = partition.keys().cloned().collect();
    let mut pairs = Vec::new();
    for a in partition.keys() {
        for (b, part_b) in partition {
            if part_b.is_subset(&closures[a]) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(Poset::new(labels, &pairs)?)
}

/// The ambient-closure transfer `Y ↦ cl(Y) ∩ S_to` between parts of a
/// stratified finite space. `Y` must be closed in the subspace topology of
/// the source part.
pub fn stratum_transfer(
    space: &Space,
    partition: &BTreeMap<String, BTreeSet<String>>,
    from: &str,
    to: &str,
    y: &ClosedSet,
) -> Result<ClosedSet, TopologyError> {
    let part_from = partition
        .get(from)
        .ok_or_else(|| TopologyError::UnknownStratum(from.to_string()))?;
    let part_to = partition
        .get(to)
        .ok_or_else(|| TopologyError::UnknownStratum(to.to_string()))?;
    let y_pts = match y {
        ClosedSet::Empty => BTreeSet::new(),
        ClosedSet::Whole => part_from.clone(),
        ClosedSet::FiniteFamily(s) => s.clone(),
        _ => {
            return Err(TopologyError::KindMismatch {
                space: space.name().to_string(),
                detail: "ambient transfers need finite-family sets".into(),
            })
        }
    };
    if !y_pts.is_subset(part_from) {
        return Err(TopologyError::NotClosedInStratum(from.to_string()));
    }
    let closure = space.closure(&y_pts)?;
    // closed in the subspace topology ⟺ cl(Y) ∩ S_from = Y
    let trace: BTreeSet<String> =
        closure.intersection(part_from).cloned().collect();
    if trace != y_pts {
        return Err(TopologyError::NotClosedInStratum(from.to_string()));
    }
    Ok(ClosedSet::FiniteFamily(
        closure.intersection(part_to).cloned().collect(),
    ))
}

/// Pull a full stratification out of a stratified finite space: subspace
/// topologies as strata, the induced order, and exhaustive transfer tables
/// for every strictly comparable pair.
pub fn extract_stratification(
    space: &Space,
    partition: &BTreeMap<String, BTreeSet<String>>,
) -> Result<StratificationData, TopologyError> {
    let poset = induced_order(space, partition)?;
    let mut strata = BTreeMap::new();
    for (label, part) in partition {
        strata.insert(
            label.clone(),
            Space::Finite {
                name: label.clone(),
                points: part.clone(),
                closed: subspace_closed_family(space, part)?,
            },
        );
    }
    let mut transfers = BTreeMap::new();
    for (a, b) in poset.strict_pairs() {
        let family = subspace_closed_family(space, &partition[&a])?;
        let mut table = Vec::new();
        for c in family {
            let y = ClosedSet::FiniteFamily(c);
            let img = stratum_transfer(space, partition, &a, &b, &y)?;
            table.push((y, img));
        }
        transfers.insert(
            (a.clone(), b.clone()),
            TransferMap { source: a, target: b, rule: TransferRule::Table(table) },
        );
    }
    Ok(StratificationData { poset, strata, transfers })
}

/// The result of gluing: an explicit finite space when every stratum is
/// finite, otherwise a lazy membership test backed by the data.
#[derive(Debug, Clone)]
pub enum Glued {
    Finite(Space),
    Lazy(LazyGlued),
}

#[derive(Debug, Clone)]
pub struct LazyGlued {
    pub data: StratificationData,
}

impl LazyGlued {
    pub fn is_closed(&self, x: &BTreeMap<String, ClosedSet>) -> Result<bool, TopologyError> {
        self.data.is_glued_closed(x)
    }
}

/// Glue a topology out of stratification data (the closed sets are exactly
/// the transfer-compatible families of per-stratum closed sets). Transfer
/// axioms are checked first — exhaustively on finite strata, on a seeded
/// sample on variety strata. In the all-finite case the resulting family
/// is enumerated, verified to be a lattice of sets, and verified to be
/// stratified by the input partition over the input poset.
pub fn glue_topology(data: &StratificationData) -> Result<Glued, TopologyError> {
    data.validate()?;
    for ((a, b), tm) in &data.transfers {
        let src = data.stratum(a)?;
        let tgt = data.stratum(b)?;
        let sets = sample_closed_sets(src, 8, 0xC0FFEE)?;
        let report = check_transfer_axioms(tm, src, tgt, &sets)?;
        if !report.passed() {
            return Err(TopologyError::TransferAxiom(
                a.clone(),
                b.clone(),
                report.failures.join("; "),
            ));
        }
    }

    let all_finite = data
        .poset
        .elements()
        .iter()
        .all(|e| matches!(data.strata.get(e), Some(Space::Finite { .. })));
    if !all_finite {
        return Ok(Glued::Lazy(LazyGlued { data: data.clone() }));
    }

    // disjointness of the point label sets
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut partition: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for e in data.poset.elements() {
        let Space::Finite { points, .. } = data.stratum(e)? else { unreachable!() };
        for p in points {
            if !seen.insert(p.clone()) {
                return Err(TopologyError::OverlappingStrata(p.clone()));
            }
        }
        partition.insert(e.clone(), points.clone());
    }

    // enumerate transfer-compatible assignments
    let elements = data.poset.elements().to_vec();
    let mut families: Vec<Vec<BTreeSet<String>>> = Vec::new();
    for e in &elements {
        let Space::Finite { closed, .. } = data.stratum(e)? else { unreachable!() };
        families.push(closed.iter().cloned().collect());
    }
    let mut glued_family: BTreeSet<BTreeSet<String>> = BTreeSet::new();
    let mut assignment: Vec<usize> = vec![0; elements.len()];
    'outer: loop {
        let x: BTreeMap<String, ClosedSet> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                (e.clone(), ClosedSet::FiniteFamily(families[i][assignment[i]].clone()))
            })
            .collect();
        if data.is_glued_closed(&x)? {
            let mut union = BTreeSet::new();
            for (i, _) in elements.iter().enumerate() {
                union.extend(families[i][assignment[i]].iter().cloned());
            }
            glued_family.insert(union);
        }
        // odometer
        for i in (0..assignment.len()).rev() {
            assignment[i] += 1;
            if assignment[i] < families[i].len() {
                continue 'outer;
            }
            assignment[i] = 0;
        }
        break;
    }

    let all_points: BTreeSet<String> = seen;
    let glued = Space::Finite {
        name: "glued".to_string(),
        points: all_points,
        closed: glued_family,
    };
    glued
        .validate()
        .map_err(|e| TopologyError::GlueVerification(e.to_string()))?;
    let report = verify_stratification(&glued, &partition, &data.poset)?;
    if !report.is_valid() {
        return Err(TopologyError::GlueVerification(report.problems.join("; ")));
    }
    Ok(Glued::Finite(glued))
}
