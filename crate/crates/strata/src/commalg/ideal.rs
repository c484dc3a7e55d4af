//! Ideals: membership, equality, elimination, saturation, intersection.
//!
//! Every ideal implicitly contains its ring's Laurent relations `x·x̂ − 1`,
//! so ideals of Laurent rings are automatically saturated with respect to
//! the inverted variables, matching localization semantics. Closed-set
//! equality downstream is ideal equality: reduced Gröbner bases under the
//! fixed default order are compared verbatim.

use std::sync::OnceLock;

use num::{One, Signed, Zero};

use super::groebner::{buchberger, reduce};
use super::order::MonomialOrder;
use super::poly::{Coeff, Point, Poly};
use super::ring::PolyRing;
use super::CommAlgError;

/// An ideal of a [`PolyRing`], with a write-once reduced-basis cache.
#[derive(Debug)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl PartialEq for Ideal {
    /// Structural equality of the stored generators (not ideal equality;
    /// see [`Ideal::equal`] for that).
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}
impl Eq for Ideal {}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.ring, &self.gens).cmp(&(&other.ring, &other.gens))
    }
}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.hash(state);
        self.gens.hash(state);
    }
}

impl Ideal {
    /// Normalizes generators (Laurent-canonical form, zeros dropped,
    /// sorted, deduplicated).
    pub fn new(ring: PolyRing, gens: Vec<Poly>) -> Self {
        let mut gens: Vec<Poly> = gens
            .into_iter()
            .map(|g| g.laurent_canonical(&ring))
            .filter(|g| !g.is_zero())
            .collect();
        gens.sort();
        gens.dedup();
        Ideal { ring, gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, vec![])
    }

    pub fn unit(ring: PolyRing) -> Self {
        let one = Poly::one(&ring);
        Ideal::new(ring, vec![one])
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    fn laurent_relations(ring: &PolyRing) -> Vec<Poly> {
        let mut rels = Vec::new();
        for i in 0..ring.n_vars() {
            if let Some(slot) = ring.companion(i) {
                let x = Poly::var(ring, i);
                let xhat = Poly::from_term(
                    {
                        let mut m = super::ring::Monomial::one(ring.internal_len());
                        m.0[slot] = 1;
                        m
                    },
                    Coeff::one(),
                );
                rels.push(&(&x * &xhat) - &Poly::one(ring));
            }
        }
        rels
    }

    /// Reduced Gröbner basis under the default grevlex order, Laurent
    /// relations included. Cached after the first computation.
    pub fn groebner(&self) -> &[Poly] {
        self.gb.get_or_init(|| self.groebner_with(&MonomialOrder::GrevLex))
    }

    /// Reduced basis under an arbitrary order (not cached).
    pub fn groebner_with(&self, order: &MonomialOrder) -> Vec<Poly> {
        let mut gens = self.gens.clone();
        gens.extend(Self::laurent_relations(&self.ring));
        buchberger(&gens, order)
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, f: &Poly) -> bool {
        reduce(f, self.groebner(), &MonomialOrder::GrevLex).is_zero()
    }

    /// Contains 1 (no points at all).
    pub fn is_unit(&self) -> bool {
        let gb = self.groebner();
        gb.len() == 1 && gb[0].is_nonzero_constant()
    }

    /// The ideal is contained in the Laurent relations alone, i.e. it cuts
    /// out the whole space.
    pub fn defines_whole_space(&self) -> bool {
        let rels = Self::laurent_relations(&self.ring);
        if rels.is_empty() {
            return self.gens.is_empty();
        }
        let rels_gb = buchberger(&rels, &MonomialOrder::GrevLex);
        self.gens
            .iter()
            .all(|g| reduce(g, &rels_gb, &MonomialOrder::GrevLex).is_zero())
    }

    /// Ideal equality = equality of reduced Gröbner bases under the fixed
    /// default order. Note this is ideal equality, not variety equality:
    /// ⟨x⟩ ≠ ⟨x²⟩ here even though they share zeros.
    pub fn equal(&self, other: &Ideal) -> Result<bool, CommAlgError> {
        if self.ring != other.ring {
            return Err(CommAlgError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(self.groebner() == other.groebner())
    }

    /// `other ⊆ self` as ideals (every generator of `other` is a member).
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, CommAlgError> {
        if self.ring != other.ring {
            return Err(CommAlgError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    /// `I ∩ ℚ[keep]` via a block elimination order; the result lives in the
    /// subring on `keep` (unknown names are rejected).
    pub fn eliminate(&self, keep: &[&str]) -> Result<Ideal, CommAlgError> {
        let mut keep_idx = Vec::with_capacity(keep.len());
        for name in keep {
            let i = self
                .ring
                .var_index(name)
                .ok_or_else(|| CommAlgError::UnknownVariable((*name).to_string()))?;
            if !keep_idx.contains(&i) {
                keep_idx.push(i);
            }
        }
        keep_idx.sort_unstable();
        Ok(self.eliminate_by_index(&keep_idx))
    }

    pub(crate) fn eliminate_by_index(&self, keep_user: &[usize]) -> Ideal {
        let mut keep_internal = vec![false; self.ring.internal_len()];
        for &i in keep_user {
            keep_internal[i] = true;
            if let Some(slot) = self.ring.companion(i) {
                keep_internal[slot] = true;
            }
        }
        let eliminate: Vec<bool> = keep_internal.iter().map(|&k| !k).collect();
        let gb = self.groebner_with(&MonomialOrder::Elim { eliminate: eliminate.clone() });

        let sub = self.ring.subring(keep_user);
        let sub_rels = Self::laurent_relations(&sub);
        let mut out = Vec::new();
        for p in gb {
            let supported = p.terms().all(|(m, _)| {
                m.0.iter().enumerate().all(|(slot, &e)| e == 0 || keep_internal[slot])
            });
            if !supported {
                continue;
            }
            let q = p.convert(&self.ring, &sub).expect("kept variables exist in subring");
            if sub_rels.iter().any(|r| *r == q) {
                continue; // the subring restores its own Laurent relations
            }
            out.push(q);
        }
        Ideal::new(sub, out)
    }

    /// `I : f^∞` by the extra-variable trick: adjoin `w`, add `w·f − 1`,
    /// eliminate `w`.
    pub fn saturate(&self, f: &Poly) -> Ideal {
        if f.is_zero() {
            return self.clone();
        }
        let wname = self.ring.fresh_name("_w");
        let mut vars: Vec<(String, bool)> = self
            .ring
            .vars()
            .iter()
            .map(|v| (v.name.clone(), v.inverted))
            .collect();
        vars.push((wname.clone(), false));
        let ext = PolyRing::new(vars).expect("fresh name keeps the ring valid");
        let w = Poly::var(&ext, ext.var_index(&wname).unwrap());
        let mut gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|g| g.convert(&self.ring, &ext).expect("extension keeps all variables"))
            .collect();
        let fe = f
            .laurent_canonical(&self.ring)
            .convert(&self.ring, &ext)
            .expect("extension keeps all variables");
        gens.push(&(&w * &fe) - &Poly::one(&ext));
        let ext_ideal = Ideal::new(ext.clone(), gens);
        let keep: Vec<usize> = (0..self.ring.n_vars()).collect();
        let res = ext_ideal.eliminate_by_index(&keep);
        // subring on the original variables is the original ring
        Ideal::new(
            self.ring.clone(),
            res.gens
                .iter()
                .map(|g| g.convert(res.ring(), &self.ring).expect("same variables"))
                .collect(),
        )
    }

    /// Ideal intersection via the `t`-trick: `(t·I + (1−t)·J) ∩ ℚ[vars]`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal, CommAlgError> {
        if self.ring != other.ring {
            return Err(CommAlgError::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        // fast paths: ⟨0⟩ ∩ J = J·0 …, unit ∩ J = J
        if self.defines_whole_space() {
            return Ok(self.clone());
        }
        if other.defines_whole_space() {
            return Ok(other.clone());
        }
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let tname = self.ring.fresh_name("_t");
        let mut vars: Vec<(String, bool)> = self
            .ring
            .vars()
            .iter()
            .map(|v| (v.name.clone(), v.inverted))
            .collect();
        vars.push((tname.clone(), false));
        let ext = PolyRing::new(vars).expect("fresh name keeps the ring valid");
        let t = Poly::var(&ext, ext.var_index(&tname).unwrap());
        let one_minus_t = &Poly::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in &self.gens {
            let ge = g.convert(&self.ring, &ext).expect("same variables");
            gens.push(&t * &ge);
        }
        for g in &other.gens {
            let ge = g.convert(&self.ring, &ext).expect("same variables");
            gens.push(&one_minus_t * &ge);
        }
        let ext_ideal = Ideal::new(ext, gens);
        let keep: Vec<usize> = (0..self.ring.n_vars()).collect();
        let res = ext_ideal.eliminate_by_index(&keep);
        Ok(Ideal::new(
            self.ring.clone(),
            res.gens
                .iter()
                .map(|g| g.convert(res.ring(), &self.ring).expect("same variables"))
                .collect(),
        ))
    }

    /// The vanishing ideal of a finite rational point set (product of the
    /// maximal ideals — distinct points give comaximal ideals, so the
    /// product equals the intersection).
    pub fn vanishing_ideal(ring: &PolyRing, points: &[Point]) -> Result<Ideal, CommAlgError> {
        let mut pts: Vec<Point> = Vec::new();
        for p in points {
            validate_point(ring, p)?;
            if !pts.contains(p) {
                pts.push(p.clone());
            }
        }
        if pts.is_empty() {
            return Ok(Ideal::unit(ring.clone()));
        }
        let mut gens: Vec<Poly> = vec![Poly::one(ring)];
        for p in &pts {
            let linear: Vec<Poly> = (0..ring.n_vars())
                .map(|i| &Poly::var(ring, i) - &Poly::constant(ring, p[i].clone()))
                .collect();
            let mut next = Vec::with_capacity(gens.len() * linear.len().max(1));
            if linear.is_empty() {
                // zero-variable ring: the only maximal ideal is ⟨0⟩
                next.push(Poly::zero());
            } else {
                for g in &gens {
                    for l in &linear {
                        next.push(g * l);
                    }
                }
            }
            gens = next;
        }
        Ok(Ideal::new(ring.clone(), gens))
    }

    /// All generators vanish at `p`. Zero coordinates at inverted variables
    /// are rejected.
    pub fn point_in_variety(&self, p: &Point) -> Result<bool, CommAlgError> {
        validate_point(&self.ring, p)?;
        for g in &self.gens {
            if !g.eval(&self.ring, p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn render(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ring)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Check a point sits in the allowed locus of the ring (nonzero coordinates
/// at inverted variables, correct dimension).
pub fn validate_point(ring: &PolyRing, p: &Point) -> Result<(), CommAlgError> {
    if p.len() != ring.n_vars() {
        return Err(CommAlgError::PointDimension { expected: ring.n_vars(), got: p.len() });
    }
    for (i, v) in ring.vars().iter().enumerate() {
        if v.inverted && p[i].is_zero() {
            return Err(CommAlgError::ZeroAtInvertedVar(v.name.clone()));
        }
    }
    Ok(())
}

/// Rational roots of the principal generator of an ideal of a univariate
/// ring, provided the generator splits into linear factors over ℚ.
/// Returns `None` when a nonlinear factor remains (the set is then left in
/// ideal form) or the ideal is not principal-univariate-friendly.
pub fn univariate_rational_roots(ideal: &Ideal) -> Option<Vec<Coeff>> {
    let ring = ideal.ring();
    if ring.n_vars() != 1 {
        return None;
    }
    // contract to the plain polynomial subring to get a principal generator
    let plain = PolyRing::plain(vec![ring.vars()[0].name.clone()]).unwrap();
    let f = if ring.is_inverted(0) {
        let comp = ring.companion(0).unwrap();
        let mut eliminate = vec![false; ring.internal_len()];
        eliminate[comp] = true;
        let gb = ideal.groebner_with(&MonomialOrder::Elim { eliminate });
        // in a reduced basis at most one element is companion-free, and it
        // generates the contraction to ℚ[y]
        let best = gb.into_iter().find(|p| p.terms().all(|(m, _)| m.0[comp] == 0))?;
        best.convert(ring, &plain).ok()?
    } else {
        let gb = ideal.groebner();
        match gb.len() {
            0 => return None, // zero ideal: the whole line, not a finite set
            1 => gb[0].clone(),
            _ => return None,
        }
    };
    if f.is_nonzero_constant() {
        return Some(vec![]);
    }
    // coefficients by degree
    let deg = f.total_degree() as usize;
    let mut coeffs = vec![Coeff::zero(); deg + 1];
    for (m, c) in f.terms() {
        coeffs[m.0[0] as usize] = c.clone();
    }
    let mut roots = Vec::new();
    // strip powers of the variable itself (roots at 0, only for plain rings)
    let shift = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        coeffs.drain(..shift);
        if !ring.is_inverted(0) {
            roots.push(Coeff::zero());
        }
    }
    let mut poly = coeffs;
    'outer: while poly.len() > 1 {
        debug_assert!(!poly.first().unwrap().is_zero());
        let mut lcm = num::BigInt::one();
        for c in &poly {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<num::BigInt> = poly
            .iter()
            .map(|c| (c * Coeff::from_integer(lcm.clone())).to_integer())
            .collect();
        let p0 = ints.first().unwrap().abs();
        let pn = ints.last().unwrap().abs();
        let (d0, dn) = (small_divisors(&p0)?, small_divisors(&pn)?);
        for num_d in &d0 {
            for den_d in &dn {
                for sign in [1i64, -1] {
                    let cand = Coeff::new(num_d * num::BigInt::from(sign), den_d.clone());
                    if eval_univariate(&poly, &cand).is_zero() {
                        roots.push(cand.clone());
                        poly = deflate(&poly, &cand);
                        continue 'outer;
                    }
                }
            }
        }
        return None; // irreducible nonlinear factor over ℚ
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

fn eval_univariate(coeffs: &[Coeff], x: &Coeff) -> Coeff {
    let mut acc = Coeff::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

fn deflate(coeffs: &[Coeff], root: &Coeff) -> Vec<Coeff> {
    // synthetic division by (x - root)
    let n = coeffs.len();
    let mut out = vec![Coeff::zero(); n - 1];
    let mut carry = Coeff::zero();
    for i in (1..n).rev() {
        carry = &coeffs[i] + &(carry * root.clone());
        out[i - 1] = carry.clone();
    }
    out
}

fn small_divisors(n: &num::BigInt) -> Option<Vec<num::BigInt>> {
    use num::ToPrimitive;
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            divs.push(num::BigInt::from(i));
            if i != n / i {
                divs.push(num::BigInt::from(n / i));
            }
        }
        i += 1;
        if divs.len() > 4096 {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::poly::rat;

    fn xy() -> PolyRing {
        PolyRing::plain(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn principal_ideal_basis() {
        let r = PolyRing::plain(vec!["x"]).unwrap();
        let x = Poly::var(&r, 0);
        let i = Ideal::new(r.clone(), vec![&x - &Poly::one(&r)]);
        assert_eq!(i.groebner().len(), 1);
        assert_eq!(i.groebner()[0].render(&r), "x - 1");
    }

    #[test]
    fn unit_ideal_detection() {
        let r = PolyRing::plain(vec!["x"]).unwrap();
        let x = Poly::var(&r, 0);
        let i = Ideal::new(r.clone(), vec![x.clone(), &x - &Poly::one(&r)]);
        assert!(i.is_unit());
        assert!(!i.defines_whole_space());
    }

    #[test]
    fn membership_spec_cases() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let i = Ideal::new(r.clone(), vec![&(&x * &x) - &y, &(&y * &y) - &x]);
        assert!(i.contains(i.gens().first().unwrap()));
        assert!(!Ideal::new(r.clone(), vec![x.clone()]).contains(&Poly::one(&r)));
        // Laurent case: Δ−t ∈ ⟨Δ−t⟩ in k[t, Δ^{±1}]
        let lr = PolyRing::new(vec![("t", true), ("D", true)]).unwrap();
        let dt = &Poly::var(&lr, 1) - &Poly::var(&lr, 0);
        let li = Ideal::new(lr.clone(), vec![dt.clone()]);
        assert!(li.contains(&dt));
        assert!(!li.contains(&Poly::one(&lr)));
    }

    #[test]
    fn laurent_relations_make_units_vanish() {
        // ⟨t⟩ in k[t^{±1}] is the unit ideal
        let r = PolyRing::laurent(vec!["t"]).unwrap();
        let i = Ideal::new(r.clone(), vec![Poly::var(&r, 0)]);
        assert!(i.is_unit());
    }

    #[test]
    fn eliminate_spec_cases() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        // ⟨y − x²⟩ ∩ ℚ[y] = 0: projection of the parabola is dense
        let i = Ideal::new(r.clone(), vec![&y - &(&x * &x)]);
        let e = i.eliminate(&["y"]).unwrap();
        assert!(e.gens().is_empty());
        // diagonal: ⟨u−t, v−t⟩ ∩ ℚ[u,v] = ⟨u−v⟩
        let r3 = PolyRing::plain(vec!["t", "u", "v"]).unwrap();
        let t = Poly::var(&r3, 0);
        let u = Poly::var(&r3, 1);
        let v = Poly::var(&r3, 2);
        let i3 = Ideal::new(r3.clone(), vec![&u - &t, &v - &t]);
        let e3 = i3.eliminate(&["u", "v"]).unwrap();
        assert_eq!(e3.gens().len(), 1);
        assert_eq!(e3.gens()[0].render(e3.ring()), "u - v");
        assert!(i3.eliminate(&["nope"]).is_err());
    }

    #[test]
    fn eliminate_result_stays_inside_ideal() {
        let r3 = PolyRing::plain(vec!["t", "u", "v"]).unwrap();
        let t = Poly::var(&r3, 0);
        let u = Poly::var(&r3, 1);
        let v = Poly::var(&r3, 2);
        let i3 = Ideal::new(r3.clone(), vec![&u - &(&t * &t), &v - &(&t * &(&t * &t))]);
        let e3 = i3.eliminate(&["u", "v"]).unwrap();
        assert!(!e3.gens().is_empty());
        for g in e3.gens() {
            let back = g.convert(e3.ring(), &r3).unwrap();
            assert!(i3.contains(&back));
        }
    }

    #[test]
    fn saturate_spec_cases() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let i = Ideal::new(r.clone(), vec![&x * &y]);
        let s = i.saturate(&x);
        assert!(s.equal(&Ideal::new(r.clone(), vec![y.clone()])).unwrap());
        let s2 = Ideal::new(r.clone(), vec![x.clone()]).saturate(&x);
        assert!(s2.is_unit());
        // ⟨x²(D−μ)⟩ : x^∞ = ⟨D−μ⟩ with D playing the second variable
        let dmu = &y - &Poly::from_int(&r, 5);
        let i3 = Ideal::new(r.clone(), vec![&(&x * &x) * &dmu]);
        let s3 = i3.saturate(&x);
        assert!(s3.equal(&Ideal::new(r.clone(), vec![dmu])).unwrap());
        // saturation contains the ideal and is idempotent
        for g in i.gens() {
            assert!(s.contains(g));
        }
        assert!(s.saturate(&x).equal(&s).unwrap());
    }

    #[test]
    fn intersect_distinct_lines() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let ix = Ideal::new(r.clone(), vec![x.clone()]);
        let iy = Ideal::new(r.clone(), vec![y.clone()]);
        let meet = ix.intersect(&iy).unwrap();
        assert!(meet.equal(&Ideal::new(r.clone(), vec![&x * &y])).unwrap());
    }

    #[test]
    fn ideal_equality_spec_cases() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let a = Ideal::new(r.clone(), vec![&x - &Poly::one(&r), y.clone()]);
        let b = Ideal::new(r.clone(), vec![y.clone(), &x - &Poly::one(&r)]);
        assert!(a.equal(&b).unwrap());
        let c = Ideal::new(r.clone(), vec![x.clone()]);
        let d = Ideal::new(r.clone(), vec![&x * &x]);
        assert!(!c.equal(&d).unwrap());
        let other = Ideal::new(PolyRing::plain(vec!["z"]).unwrap(), vec![]);
        assert!(a.equal(&other).is_err());
    }

    #[test]
    fn vanishing_ideal_and_points() {
        let r = xy();
        let pts = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(4, 1)]];
        let i = Ideal::vanishing_ideal(&r, &pts).unwrap();
        assert!(i.point_in_variety(&pts[0]).unwrap());
        assert!(i.point_in_variety(&pts[1]).unwrap());
        assert!(!i.point_in_variety(&vec![rat(1, 1), rat(4, 1)]).unwrap());
        // unit ideal has no points
        let u = Ideal::unit(r.clone());
        assert!(!u.point_in_variety(&vec![rat(0, 1), rat(0, 1)]).unwrap());
        // zero coordinate at an inverted variable is an error
        let lr = PolyRing::laurent(vec!["t"]).unwrap();
        let li = Ideal::zero(lr);
        assert!(li.point_in_variety(&vec![rat(0, 1)]).is_err());
    }

    #[test]
    fn rational_roots_of_univariate_ideals() {
        // Laurent ring: ⟨(y−2)(y−3)⟩ in k[y^{±1}]
        let r = PolyRing::laurent(vec!["y"]).unwrap();
        let y = Poly::var(&r, 0);
        let f = &(&y - &Poly::from_int(&r, 2)) * &(&y - &Poly::from_int(&r, 3));
        let i = Ideal::new(r.clone(), vec![f]);
        let roots = univariate_rational_roots(&i).unwrap();
        assert_eq!(roots, vec![rat(2, 1), rat(3, 1)]);
        // y² + 1 has no rational roots
        let g = &(&y * &y) + &Poly::one(&r);
        let j = Ideal::new(r.clone(), vec![g]);
        assert!(univariate_rational_roots(&j).is_none());
        // plain ring keeps a root at zero
        let pr = PolyRing::plain(vec!["w"]).unwrap();
        let w = Poly::var(&pr, 0);
        let k = Ideal::new(pr.clone(), vec![&(&w * &w) - &(&w * &Poly::from_int(&pr, 5))]);
        let roots = univariate_rational_roots(&k).unwrap();
        assert_eq!(roots, vec![rat(0, 1), rat(5, 1)]);
        // half-integer root
        let h = Ideal::new(pr.clone(), vec![&(&w + &w) - &Poly::one(&pr)]);
        assert_eq!(univariate_rational_roots(&h).unwrap(), vec![rat(1, 2)]);
    }
}
