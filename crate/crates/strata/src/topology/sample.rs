//! Deterministic, seed-driven samplers of closed sets and rational points.
//!
//! Transfer-map axiom checks and the point-level agreement oracles both
//! need streams of closed sets of a stratum. Finite strata are enumerated
//! exhaustively; variety strata are sampled: finite point sets, coordinate
//! slices `V(x − c)`, binomial slices `V(x − c·y)`, whole, and unions of
//! those — the shapes the worked models actually produce.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::set::{ClosedSet, Space};
use super::TopologyError;
use crate::commalg::{parse_rational, Coeff, Ideal, Point, Poly, PolyRing};

/// Small nonzero rationals used for sampled coordinates and constants.
const POOL: &[&str] = &[
    "1", "2", "3", "5", "-1", "-2", "-3", "1/2", "3/2", "-1/3", "7", "2/5", "4", "-5", "5/2",
    "-3/2", "6", "1/4", "-7", "8/3",
];

#[derive(Debug, Clone)]
pub struct VarietySampler {
    rng: ChaCha8Rng,
}

impl VarietySampler {
    pub fn new(seed: u64) -> Self {
        VarietySampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn nonzero_rat(&mut self) -> Coeff {
        let i = self.rng.random_range(0..POOL.len());
        parse_rational(POOL[i]).expect("pool entries parse")
    }

    /// A valid rational point of the stratum (nonzero at inverted vars;
    /// non-inverted coordinates may still come out nonzero — zero is mixed
    /// in explicitly where wanted).
    pub fn point(&mut self, ring: &PolyRing) -> Point {
        (0..ring.n_vars()).map(|_| self.nonzero_rat()).collect()
    }

    /// `n` pairwise distinct points (best effort within the value pool).
    fn distinct_points(&mut self, ring: &PolyRing, n: usize) -> Vec<Point> {
        self.distinct_on(ring, n, |_| {})
    }

    /// Distinct points after applying a constraint (e.g. pinning one
    /// coordinate to sample a slice).
    fn distinct_on(
        &mut self,
        ring: &PolyRing,
        n: usize,
        constrain: impl Fn(&mut Point),
    ) -> Vec<Point> {
        let mut pts: Vec<Point> = Vec::new();
        let mut tries = 0;
        while pts.len() < n && tries < 40 * n {
            let mut p = self.point(ring);
            constrain(&mut p);
            if !pts.contains(&p) {
                pts.push(p);
            }
            tries += 1;
        }
        pts
    }

    /// A closed set of the stratum together with rational points on it,
    /// suitable for point-level oracles.
    pub fn set_with_points(
        &mut self,
        ring: &PolyRing,
        want_points: usize,
    ) -> (ClosedSet, Vec<Point>) {
        let n = ring.n_vars();
        if n == 0 {
            // the stratum is a single (rational) point
            return if self.rng.random_range(0..4) == 0 {
                (ClosedSet::Empty, vec![])
            } else {
                (ClosedSet::Whole, vec![vec![]])
            };
        }
        let kind = self.rng.random_range(0..10u32);
        match kind {
            0 => (ClosedSet::Empty, vec![]),
            1 | 2 => {
                let k = self.rng.random_range(1..=3usize);
                let pts = self.distinct_points(ring, k);
                (ClosedSet::points(pts.clone()), pts)
            }
            3 | 4 | 5 => {
                // coordinate slice x_v = c
                let v = self.rng.random_range(0..n);
                let c = self.nonzero_rat();
                let gen = &Poly::var(ring, v) - &Poly::constant(ring, c.clone());
                let set = ClosedSet::from_ideal(Ideal::new(ring.clone(), vec![gen]));
                let pts = self.distinct_on(ring, want_points, |p| p[v] = c.clone());
                (set, pts)
            }
            6 | 7 if n >= 2 => {
                // binomial slice x_u = c·x_v
                let u = self.rng.random_range(0..n);
                let mut v = self.rng.random_range(0..n);
                while v == u {
                    v = self.rng.random_range(0..n);
                }
                let c = self.nonzero_rat();
                let gen = &Poly::var(ring, u) - &Poly::var(ring, v).scale(&c);
                let set = ClosedSet::from_ideal(Ideal::new(ring.clone(), vec![gen]));
                let pts = self.distinct_on(ring, want_points, |p| p[u] = &c * &p[v]);
                (set, pts)
            }
            8 => {
                // union of a slice with a point
                let v = self.rng.random_range(0..n);
                let c = self.nonzero_rat();
                let gen = &Poly::var(ring, v) - &Poly::constant(ring, c.clone());
                let slice = Ideal::new(ring.clone(), vec![gen]);
                let extra = self.point(ring);
                let pt_ideal = Ideal::vanishing_ideal(ring, &[extra.clone()])
                    .expect("sampled points are valid");
                let both = slice.intersect(&pt_ideal).expect("same ring");
                let mut pts = self.distinct_on(ring, want_points, |p| p[v] = c.clone());
                if !pts.contains(&extra) {
                    pts.push(extra);
                }
                (ClosedSet::from_ideal(both), pts)
            }
            _ => {
                let pts = self.distinct_points(ring, want_points);
                (ClosedSet::Whole, pts)
            }
        }
    }

    /// A closed set without the point bookkeeping.
    pub fn closed_set(&mut self, ring: &PolyRing) -> ClosedSet {
        self.set_with_points(ring, 2).0
    }
}

/// Closed sets of a stratum for axiom checking: everything, for a finite
/// stratum; `n` sampled sets (always including ∅ and the whole stratum)
/// for a variety stratum.
pub fn sample_closed_sets(
    space: &Space,
    n: usize,
    seed: u64,
) -> Result<Vec<ClosedSet>, TopologyError> {
    match space {
        Space::Finite { closed, .. } => Ok(closed
            .iter()
            .map(|c| ClosedSet::FiniteFamily(c.clone()))
            .collect()),
        Space::Variety { ring, .. } => {
            let mut sampler = VarietySampler::new(seed);
            let mut out = vec![ClosedSet::Empty, ClosedSet::Whole];
            while out.len() < n.max(2) {
                out.push(sampler.closed_set(ring));
            }
            Ok(out)
        }
    }
}

/// A deterministic grid of valid rational points of the stratum, used as
/// membership candidates by point-level oracles.
pub fn candidate_grid(ring: &PolyRing, per_axis: usize) -> Vec<Point> {
    let n = ring.n_vars();
    if n == 0 {
        return vec![vec![]];
    }
    let axis: Vec<Coeff> = POOL
        .iter()
        .take(per_axis.max(1))
        .map(|s| parse_rational(s).expect("pool entries parse"))
        .collect();
    let mut out = Vec::new();
    let total = axis.len().pow(n as u32);
    for mut idx in 0..total {
        let mut p = Vec::with_capacity(n);
        for _ in 0..n {
            p.push(axis[idx % axis.len()].clone());
            idx /= axis.len();
        }
        out.push(p);
    }
    out
}

/// All distinct closed subsets of a finite subspace `part ⊆ space`:
/// the traces `C ∩ part` of the ambient closed family.
pub fn subspace_closed_family(
    space: &Space,
    part: &BTreeSet<String>,
) -> Result<BTreeSet<BTreeSet<String>>, TopologyError> {
    let Space::Finite { closed, .. } = space else {
        return Err(TopologyError::KindMismatch {
            space: space.name().to_string(),
            detail: "subspace families need a finite space".into(),
        });
    };
    Ok(closed
        .iter()
        .map(|c| c.intersection(part).cloned().collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_deterministic() {
        let ring = PolyRing::laurent(vec!["t", "D"]).unwrap();
        let mut a = VarietySampler::new(7);
        let mut b = VarietySampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.closed_set(&ring), b.closed_set(&ring));
        }
    }

    #[test]
    fn sampled_points_lie_on_their_sets() {
        let ring = PolyRing::laurent(vec!["a", "d"]).unwrap();
        let mut s = VarietySampler::new(3);
        for _ in 0..40 {
            let (set, pts) = s.set_with_points(&ring, 3);
            let ideal = set.to_ideal(&ring).unwrap();
            for p in &pts {
                assert!(ideal.point_in_variety(p).unwrap(), "{set:?} missing {p:?}");
            }
        }
    }

    #[test]
    fn grid_respects_torus_constraints() {
        let ring = PolyRing::laurent(vec!["t"]).unwrap();
        for p in candidate_grid(&ring, 5) {
            assert!(!num::Zero::is_zero(&p[0]));
        }
        assert_eq!(candidate_grid(&PolyRing::scalar(), 3), vec![Vec::<Coeff>::new()]);
    }
}
