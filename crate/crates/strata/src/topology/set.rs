//! Spaces and their closed sets.

use std::collections::BTreeSet;


use super::TopologyError;
use crate::commalg::{
    univariate_rational_roots, validate_point, Coeff, Ideal, Point, PolyRing,
};

/// A stratum: an explicit finite space, or the rational-point model of an
/// affine/torus variety over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Space {
    Finite {
        name: String,
        points: BTreeSet<String>,
        /// the full lattice of closed subsets
        closed: BTreeSet<BTreeSet<String>>,
    },
    Variety {
        name: String,
        ring: PolyRing,
    },
}

impl Space {
    pub fn finite<S: Into<String>>(
        name: S,
        points: &[&str],
        closed: &[&[&str]],
    ) -> Self {
        Space::Finite {
            name: name.into(),
            points: points.iter().map(|p| p.to_string()).collect(),
            closed: closed
                .iter()
                .map(|c| c.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }

    pub fn variety<S: Into<String>>(name: S, ring: PolyRing) -> Self {
        Space::Variety { name: name.into(), ring }
    }

    pub fn name(&self) -> &str {
        match self {
            Space::Finite { name, .. } => name,
            Space::Variety { name, .. } => name,
        }
    }

    pub fn ring(&self) -> Option<&PolyRing> {
        match self {
            Space::Variety { ring, .. } => Some(ring),
            Space::Finite { .. } => None,
        }
    }

    /// For a finite space: a closed family must contain ∅ and the whole
    /// point set, stay within the point set, and be closed under pairwise
    /// union and intersection.
    pub fn validate(&self) -> Result<(), TopologyError> {
        let Space::Finite { name, points, closed } = self else {
            return Ok(());
        };
        let bad = |detail: String| TopologyError::KindMismatch {
            space: name.clone(),
            detail,
        };
        if !closed.contains(&BTreeSet::new()) {
            return Err(bad("closed family misses ∅".into()));
        }
        if !closed.contains(points) {
            return Err(bad("closed family misses the whole space".into()));
        }
        for c in closed {
            if !c.is_subset(points) {
                return Err(bad(format!("closed set {c:?} leaves the point set")));
            }
        }
        for a in closed {
            for b in closed {
                let union: BTreeSet<String> = a.union(b).cloned().collect();
                if !closed.contains(&union) {
                    return Err(bad(format!("union of {a:?} and {b:?} not closed")));
                }
                let meet: BTreeSet<String> = a.intersection(b).cloned().collect();
                if !closed.contains(&meet) {
                    return Err(bad(format!("intersection of {a:?} and {b:?} not closed")));
                }
            }
        }
        Ok(())
    }

    /// Closure of a subset of a finite space: the smallest closed superset.
    pub fn closure(&self, sub: &BTreeSet<String>) -> Result<BTreeSet<String>, TopologyError> {
        let Space::Finite { name, points, closed } = self else {
            return Err(TopologyError::KindMismatch {
                space: self.name().to_string(),
                detail: "closure of explicit subsets needs a finite space".into(),
            });
        };
        for p in sub {
            if !points.contains(p) {
                return Err(TopologyError::UnknownPoint(p.clone()));
            }
        }
        closed
            .iter()
            .filter(|c| sub.is_subset(c))
            .cloned()
            .reduce(|a, b| a.intersection(&b).cloned().collect())
            .ok_or_else(|| TopologyError::KindMismatch {
                space: name.clone(),
                detail: "no closed superset (family misses the whole space)".into(),
            })
    }

    pub fn is_closed(&self, sub: &BTreeSet<String>) -> bool {
        match self {
            Space::Finite { closed, .. } => closed.contains(sub),
            Space::Variety { .. } => false,
        }
    }

    /// A subset is locally closed iff it is open in its closure, i.e. its
    /// closure minus the set is closed again.
    pub fn is_locally_closed(&self, sub: &BTreeSet<String>) -> Result<bool, TopologyError> {
        let cl = self.closure(sub)?;
        let boundary: BTreeSet<String> = cl.difference(sub).cloned().collect();
        Ok(self.is_closed(&boundary))
    }
}

/// A closed subset of a stratum.
///
/// `Empty` and `Whole` are the lattice bottom and top of any stratum;
/// `FinitePoints`/`Variety` live in variety strata and `FiniteFamily` in
/// finite ones. Equality as sets is [`ClosedSet::equiv`] (ideal equality on
/// the variety side); the derived `Eq` is structural only.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClosedSet {
    Empty,
    Whole,
    FinitePoints(Vec<Point>),
    Variety(Ideal),
    FiniteFamily(BTreeSet<String>),
}

impl ClosedSet {
    pub fn points(pts: Vec<Point>) -> Self {
        let mut pts = pts;
        pts.sort();
        pts.dedup();
        ClosedSet::FinitePoints(pts)
    }

    pub fn family(names: &[&str]) -> Self {
        ClosedSet::FiniteFamily(names.iter().map(|s| s.to_string()).collect())
    }

    /// Check the set is well-formed for the given stratum (coordinates
    /// dimension/nonzero constraints, membership of the point labels).
    pub fn validate_in(&self, space: &Space) -> Result<(), TopologyError> {
        match (self, space) {
            (ClosedSet::Empty | ClosedSet::Whole, _) => Ok(()),
            (ClosedSet::FinitePoints(pts), Space::Variety { ring, .. }) => {
                for p in pts {
                    validate_point(ring, p)?;
                }
                Ok(())
            }
            (ClosedSet::Variety(i), Space::Variety { ring, .. }) => {
                if i.ring() == ring {
                    Ok(())
                } else {
                    Err(TopologyError::KindMismatch {
                        space: space.name().to_string(),
                        detail: format!(
                            "ideal lives in {} but the stratum ring is {}",
                            i.ring(),
                            ring
                        ),
                    })
                }
            }
            (ClosedSet::FiniteFamily(sub), Space::Finite { points, .. }) => {
                for p in sub {
                    if !points.contains(p) {
                        return Err(TopologyError::UnknownPoint(p.clone()));
                    }
                }
                Ok(())
            }
            _ => Err(TopologyError::KindMismatch {
                space: space.name().to_string(),
                detail: "set variant does not match the space kind".into(),
            }),
        }
    }

    /// Is this set closed in the stratum? Variety-side variants are closed
    /// by construction; on the finite side the subset must belong to the
    /// closed family.
    pub fn is_closed_in(&self, space: &Space) -> Result<bool, TopologyError> {
        self.validate_in(space)?;
        match (self, space) {
            (ClosedSet::Empty | ClosedSet::Whole, _) => Ok(true),
            (_, Space::Variety { .. }) => Ok(true),
            (ClosedSet::FiniteFamily(sub), Space::Finite { .. }) => Ok(space.is_closed(sub)),
            _ => unreachable!("validate_in filtered mismatches"),
        }
    }

    /// Explicit point set in a finite stratum.
    pub fn materialize(&self, space: &Space) -> Result<BTreeSet<String>, TopologyError> {
        let Space::Finite { points, .. } = space else {
            return Err(TopologyError::KindMismatch {
                space: space.name().to_string(),
                detail: "cannot materialize in a variety stratum".into(),
            });
        };
        match self {
            ClosedSet::Empty => Ok(BTreeSet::new()),
            ClosedSet::Whole => Ok(points.clone()),
            ClosedSet::FiniteFamily(sub) => {
                self.validate_in(space)?;
                Ok(sub.clone())
            }
            _ => Err(TopologyError::KindMismatch {
                space: space.name().to_string(),
                detail: "set variant does not match the space kind".into(),
            }),
        }
    }

    /// The defining ideal in a variety stratum.
    pub fn to_ideal(&self, ring: &PolyRing) -> Result<Ideal, TopologyError> {
        match self {
            ClosedSet::Empty => Ok(Ideal::unit(ring.clone())),
            ClosedSet::Whole => Ok(Ideal::zero(ring.clone())),
            ClosedSet::FinitePoints(pts) => Ok(Ideal::vanishing_ideal(ring, pts)?),
            ClosedSet::Variety(i) => {
                if i.ring() == ring {
                    Ok(i.clone())
                } else {
                    Err(TopologyError::KindMismatch {
                        space: ring.to_string(),
                        detail: "ideal belongs to a different ring".into(),
                    })
                }
            }
            ClosedSet::FiniteFamily(_) => Err(TopologyError::KindMismatch {
                space: ring.to_string(),
                detail: "finite-family sets have no ideal".into(),
            }),
        }
    }

    /// Canonical form of an ideal as a closed set: the unit ideal is ∅, an
    /// ideal cutting out everything is `Whole`, a proper ideal of a
    /// one-variable ring that splits over ℚ becomes its finite point set,
    /// anything else stays an ideal.
    pub fn from_ideal(ideal: Ideal) -> ClosedSet {
        if ideal.is_unit() {
            return ClosedSet::Empty;
        }
        if ideal.defines_whole_space() {
            return ClosedSet::Whole;
        }
        if ideal.ring().n_vars() == 1 {
            if let Some(roots) = univariate_rational_roots(&ideal) {
                return ClosedSet::points(roots.into_iter().map(|r| vec![r]).collect());
            }
        }
        ClosedSet::Variety(ideal)
    }

    pub fn union(&self, other: &ClosedSet, space: &Space) -> Result<ClosedSet, TopologyError> {
        match (self, other) {
            (ClosedSet::Empty, x) | (x, ClosedSet::Empty) => Ok(x.clone()),
            (ClosedSet::Whole, _) | (_, ClosedSet::Whole) => Ok(ClosedSet::Whole),
            (ClosedSet::FiniteFamily(a), ClosedSet::FiniteFamily(b)) => {
                Ok(ClosedSet::FiniteFamily(a.union(b).cloned().collect()))
            }
            (ClosedSet::FinitePoints(a), ClosedSet::FinitePoints(b)) => {
                let mut pts = a.clone();
                pts.extend(b.iter().cloned());
                Ok(ClosedSet::points(pts))
            }
            _ => {
                let ring = space.ring().ok_or_else(|| TopologyError::KindMismatch {
                    space: space.name().to_string(),
                    detail: "mixed set kinds in a finite stratum".into(),
                })?;
                let i = self.to_ideal(ring)?;
                let j = other.to_ideal(ring)?;
                Ok(ClosedSet::from_ideal(i.intersect(&j)?))
            }
        }
    }

    pub fn intersection(
        &self,
        other: &ClosedSet,
        space: &Space,
    ) -> Result<ClosedSet, TopologyError> {
        match (self, other) {
            (ClosedSet::Empty, _) | (_, ClosedSet::Empty) => Ok(ClosedSet::Empty),
            (ClosedSet::Whole, x) | (x, ClosedSet::Whole) => Ok(x.clone()),
            (ClosedSet::FiniteFamily(a), ClosedSet::FiniteFamily(b)) => {
                Ok(ClosedSet::FiniteFamily(a.intersection(b).cloned().collect()))
            }
            (ClosedSet::FinitePoints(a), ClosedSet::FinitePoints(b)) => {
                Ok(ClosedSet::points(
                    a.iter().filter(|p| b.contains(p)).cloned().collect(),
                ))
            }
            _ => {
                let ring = space.ring().ok_or_else(|| TopologyError::KindMismatch {
                    space: space.name().to_string(),
                    detail: "mixed set kinds in a finite stratum".into(),
                })?;
                let i = self.to_ideal(ring)?;
                let j = other.to_ideal(ring)?;
                let sum = Ideal::new(
                    ring.clone(),
                    i.gens().iter().chain(j.gens()).cloned().collect(),
                );
                Ok(ClosedSet::from_ideal(sum))
            }
        }
    }

    /// Set inclusion. On the variety side this is reverse ideal containment
    /// (sound for the radical-by-construction ideals used throughout).
    pub fn subset_of(&self, other: &ClosedSet, space: &Space) -> Result<bool, TopologyError> {
        match (self, other) {
            (ClosedSet::Empty, _) => Ok(true),
            (_, ClosedSet::Whole) => Ok(true),
            (ClosedSet::FiniteFamily(a), ClosedSet::FiniteFamily(b)) => Ok(a.is_subset(b)),
            (ClosedSet::FiniteFamily(a), ClosedSet::Empty) => Ok(a.is_empty()),
            (ClosedSet::Whole, ClosedSet::FiniteFamily(b)) => {
                let Space::Finite { points, .. } = space else {
                    return Err(TopologyError::KindMismatch {
                        space: space.name().to_string(),
                        detail: "Whole vs finite family outside a finite stratum".into(),
                    });
                };
                Ok(points.is_subset(b))
            }
            (ClosedSet::FinitePoints(pts), other) => {
                // cheap exact route: point membership
                let ring = space.ring().ok_or_else(|| TopologyError::KindMismatch {
                    space: space.name().to_string(),
                    detail: "points in a finite stratum".into(),
                })?;
                match other {
                    ClosedSet::Empty => Ok(pts.is_empty()),
                    ClosedSet::FinitePoints(qs) => Ok(pts.iter().all(|p| qs.contains(p))),
                    ClosedSet::Variety(i) => {
                        for p in pts {
                            if !i.point_in_variety(p)? {
                                return Ok(false);
                            }
                        }
                        Ok(true)
                    }
                    _ => {
                        let _ = ring;
                        unreachable!("Whole handled above")
                    }
                }
            }
            _ => {
                let ring = space.ring().ok_or_else(|| TopologyError::KindMismatch {
                    space: space.name().to_string(),
                    detail: "mixed set kinds in a finite stratum".into(),
                })?;
                let i = self.to_ideal(ring)?;
                let j = other.to_ideal(ring)?;
                Ok(i.contains_ideal(&j)?)
            }
        }
    }

    /// Equality as closed sets (ideal equality on the variety side).
    pub fn equiv(&self, other: &ClosedSet, space: &Space) -> Result<bool, TopologyError> {
        if self == other {
            return Ok(true);
        }
        match space {
            Space::Finite { points, .. } => {
                let a = match self {
                    ClosedSet::Empty => BTreeSet::new(),
                    ClosedSet::Whole => points.clone(),
                    ClosedSet::FiniteFamily(s) => s.clone(),
                    _ => {
                        return Err(TopologyError::KindMismatch {
                            space: space.name().to_string(),
                            detail: "variety-side set in a finite stratum".into(),
                        })
                    }
                };
                let b = match other {
                    ClosedSet::Empty => BTreeSet::new(),
                    ClosedSet::Whole => points.clone(),
                    ClosedSet::FiniteFamily(s) => s.clone(),
                    _ => {
                        return Err(TopologyError::KindMismatch {
                            space: space.name().to_string(),
                            detail: "variety-side set in a finite stratum".into(),
                        })
                    }
                };
                Ok(a == b)
            }
            Space::Variety { ring, .. } => {
                let i = self.to_ideal(ring)?;
                let j = other.to_ideal(ring)?;
                Ok(i.equal(&j)?)
            }
        }
    }

    pub fn is_empty_set(&self, space: &Space) -> Result<bool, TopologyError> {
        self.equiv(&ClosedSet::Empty, space)
    }

    pub fn is_whole_set(&self, space: &Space) -> Result<bool, TopologyError> {
        self.equiv(&ClosedSet::Whole, space)
    }

    /// Human-readable rendering; a whole zero-dimensional stratum prints as
    /// the singleton of the stratum's name.
    pub fn render(&self, space: &Space) -> String {
        match self {
            ClosedSet::Empty => "∅".to_string(),
            ClosedSet::Whole => match space.ring() {
                Some(ring) if ring.n_vars() == 0 => format!("{{{}}}", space.name()),
                _ => "whole".to_string(),
            },
            ClosedSet::FinitePoints(pts) => {
                if pts.is_empty() {
                    return "∅".to_string();
                }
                let parts: Vec<String> = pts.iter().map(|p| render_point(p)).collect();
                format!("{{{}}}", parts.join("; "))
            }
            ClosedSet::Variety(i) => {
                if i.gens().is_empty() {
                    return "whole".to_string();
                }
                let parts: Vec<String> =
                    i.gens().iter().map(|g| g.render(i.ring())).collect();
                format!("V({})", parts.join(", "))
            }
            ClosedSet::FiniteFamily(sub) => {
                let parts: Vec<String> = sub.iter().cloned().collect();
                format!("{{{}}}", parts.join(", "))
            }
        }
    }
}

fn render_point(p: &[Coeff]) -> String {
    let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    if coords.len() == 1 {
        coords.into_iter().next().unwrap()
    } else {
        format!("({})", coords.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::rat;

    fn sierpinski() -> Space {
        Space::finite("S", &["x", "y"], &[&[], &["y"], &["x", "y"]])
    }

    #[test]
    fn finite_space_validation() {
        assert!(sierpinski().validate().is_ok());
        let bad = Space::finite("B", &["x", "y"], &[&["y"], &["x", "y"]]);
        assert!(bad.validate().is_err()); // missing ∅
        let not_lattice = Space::finite("L", &["x", "y"], &[&[], &["x"], &["y"]]);
        assert!(not_lattice.validate().is_err()); // missing whole, union
    }

    #[test]
    fn closure_in_sierpinski() {
        let s = sierpinski();
        let x: BTreeSet<String> = ["x".to_string()].into();
        assert_eq!(s.closure(&x).unwrap().len(), 2);
        let y: BTreeSet<String> = ["y".to_string()].into();
        assert_eq!(s.closure(&y).unwrap(), y);
        assert!(s.is_locally_closed(&x).unwrap());
    }

    #[test]
    fn lattice_bottom_top() {
        let ring = PolyRing::laurent(vec!["y"]).unwrap();
        let sp = Space::variety("J", ring.clone());
        let pts = ClosedSet::points(vec![vec![rat(2, 1)]]);
        let u = ClosedSet::Empty.union(&pts, &sp).unwrap();
        assert!(u.equiv(&pts, &sp).unwrap());
        let w = ClosedSet::Whole.union(&pts, &sp).unwrap();
        assert!(w.is_whole_set(&sp).unwrap());
        let m = ClosedSet::Whole.intersection(&pts, &sp).unwrap();
        assert!(m.equiv(&pts, &sp).unwrap());
    }

    #[test]
    fn points_variety_mixing() {
        let ring = PolyRing::laurent(vec!["y"]).unwrap();
        let sp = Space::variety("J", ring.clone());
        let p2 = ClosedSet::points(vec![vec![rat(2, 1)]]);
        let p3 = ClosedSet::points(vec![vec![rat(3, 1)]]);
        let both = p2.union(&p3, &sp).unwrap();
        let ideal = both.to_ideal(&ring).unwrap();
        assert!(ideal.point_in_variety(&vec![rat(2, 1)]).unwrap());
        assert!(ideal.point_in_variety(&vec![rat(3, 1)]).unwrap());
        assert!(!ideal.point_in_variety(&vec![rat(5, 1)]).unwrap());
        // canonical form comes back as points
        let back = ClosedSet::from_ideal(ideal);
        assert!(matches!(&back, ClosedSet::FinitePoints(v) if v.len() == 2));
        assert!(p2.subset_of(&both, &sp).unwrap());
        assert!(!both.subset_of(&p2, &sp).unwrap());
    }

    #[test]
    fn zero_coordinate_rejected_on_torus() {
        let ring = PolyRing::laurent(vec!["y"]).unwrap();
        let sp = Space::variety("J", ring);
        let bad = ClosedSet::points(vec![vec![rat(0, 1)]]);
        assert!(bad.validate_in(&sp).is_err());
    }

    #[test]
    fn render_shapes() {
        let ring = PolyRing::laurent(vec!["y"]).unwrap();
        let sp = Space::variety("J", ring.clone());
        assert_eq!(ClosedSet::Empty.render(&sp), "∅");
        assert_eq!(ClosedSet::Whole.render(&sp), "whole");
        let pt_space = Space::variety("K", PolyRing::scalar());
        assert_eq!(ClosedSet::Whole.render(&pt_space), "{K}");
        let two = ClosedSet::points(vec![vec![rat(2, 1)], vec![rat(1, 2)]]);
        assert_eq!(two.render(&sp), "{1/2; 2}");
    }
}
