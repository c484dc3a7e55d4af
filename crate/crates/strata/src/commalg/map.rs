//! Algebra homomorphisms between polynomial rings, with ideal extension and
//! contraction. These realize comorphisms of affine spectra: a map
//! `R → T` acts on closed sets by extension (preimage under the comorphism)
//! and contraction (closure of the image under the comorphism).

use num::One;

use super::ideal::Ideal;
use super::poly::{Coeff, Point, Poly};
use super::ring::{Monomial, PolyRing};
use super::CommAlgError;

/// A ℚ-algebra map `source → target`, given by one target polynomial per
/// source variable. Images of inverted source variables must be unit
/// monomials of the target (a scalar times a Laurent monomial in inverted
/// variables), so companions have well-defined images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgMap {
    source: PolyRing,
    target: PolyRing,
    images: Vec<Poly>,
    companion_images: Vec<Option<Poly>>,
}

impl AlgMap {
    pub fn new(
        source: PolyRing,
        target: PolyRing,
        images: Vec<Poly>,
    ) -> Result<Self, CommAlgError> {
        if images.len() != source.n_vars() {
            return Err(CommAlgError::ImageCount {
                expected: source.n_vars(),
                got: images.len(),
            });
        }
        let images: Vec<Poly> =
            images.into_iter().map(|p| p.laurent_canonical(&target)).collect();
        let mut companion_images = vec![None; source.n_vars()];
        for (i, v) in source.vars().iter().enumerate() {
            if !v.inverted {
                continue;
            }
            let inv = invert_unit_monomial(&target, &images[i]).ok_or_else(|| {
                CommAlgError::NonUnitImage {
                    var: v.name.clone(),
                    image: images[i].render(&target),
                }
            })?;
            companion_images[i] = Some(inv);
        }
        Ok(AlgMap { source, target, images, companion_images })
    }

    /// The identity map of a ring.
    pub fn identity(ring: &PolyRing) -> Self {
        let images = (0..ring.n_vars()).map(|i| Poly::var(ring, i)).collect();
        AlgMap::new(ring.clone(), ring.clone(), images).expect("variables are units")
    }

    pub fn source(&self) -> &PolyRing {
        &self.source
    }

    pub fn target(&self) -> &PolyRing {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// Substitute images into a source polynomial.
    pub fn apply(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let mut term = Poly::constant(&self.target, c.clone());
            for (slot, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (user, sign) = self.source.slot_owner(slot);
                let base = if sign > 0 {
                    &self.images[user]
                } else {
                    self.companion_images[user]
                        .as_ref()
                        .expect("companion slots only exist for inverted variables")
                };
                for _ in 0..e {
                    term = &term * base;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Extension: the ideal of the target generated by the images of the
    /// generators (target Laurent relations are implicit as always).
    pub fn extend(&self, ideal: &Ideal) -> Result<Ideal, CommAlgError> {
        if ideal.ring() != &self.source {
            return Err(CommAlgError::RingMismatch {
                left: ideal.ring().to_string(),
                right: self.source.to_string(),
            });
        }
        let gens = ideal.gens().iter().map(|g| self.apply(g)).collect();
        Ok(Ideal::new(self.target.clone(), gens))
    }

    /// Contraction `m⁻¹(I)` by graph-ideal elimination: adjoin the source
    /// variables with relations `x − image(x)`, eliminate the target
    /// variables.
    pub fn contract(&self, ideal: &Ideal) -> Result<Ideal, CommAlgError> {
        if ideal.ring() != &self.target {
            return Err(CommAlgError::RingMismatch {
                left: ideal.ring().to_string(),
                right: self.target.to_string(),
            });
        }
        // tensor ring: target variables, then source variables renamed to
        // dodge collisions
        let mut vars: Vec<(String, bool)> = self
            .target
            .vars()
            .iter()
            .map(|v| (v.name.clone(), v.inverted))
            .collect();
        let mut src_names = Vec::with_capacity(self.source.n_vars());
        for v in self.source.vars() {
            let mut name = v.name.clone();
            while vars.iter().any(|(n, _)| *n == name) {
                name.insert_str(0, "s_");
            }
            src_names.push(name.clone());
            vars.push((name, v.inverted));
        }
        let tensor = PolyRing::new(vars).expect("names made fresh above");
        let n_target = self.target.n_vars();

        let mut gens: Vec<Poly> = ideal
            .gens()
            .iter()
            .map(|g| g.convert(&self.target, &tensor).expect("target names kept"))
            .collect();
        for (i, name) in src_names.iter().enumerate() {
            let xi = Poly::var(&tensor, tensor.var_index(name).unwrap());
            let img = self.images[i]
                .convert(&self.target, &tensor)
                .expect("target names kept");
            gens.push(&xi - &img);
        }
        let tensor_ideal = Ideal::new(tensor, gens);
        let keep: Vec<usize> = (n_target..n_target + self.source.n_vars()).collect();
        let contracted = tensor_ideal.eliminate_by_index(&keep);

        // positional rename back into the source ring
        let out_gens: Vec<Poly> = contracted
            .gens()
            .iter()
            .map(|g| {
                let mut q = Poly::zero();
                for (m, c) in g.terms() {
                    let exps = Poly::monomial_exponents(contracted.ring(), m);
                    let back = Poly::exponents_to_monomial(&self.source, &exps)
                        .expect("flags agree positionally");
                    q.add_term(back, c.clone());
                }
                q
            })
            .collect();
        Ok(Ideal::new(self.source.clone(), out_gens))
    }

    /// The comorphism on rational points: a point of the target space maps
    /// to the point of the source space whose coordinates are the images
    /// evaluated there.
    pub fn pull_point(&self, p: &Point) -> Result<Point, CommAlgError> {
        let mut out = Vec::with_capacity(self.source.n_vars());
        for (i, img) in self.images.iter().enumerate() {
            let v = img.eval(&self.target, p)?;
            if self.source.is_inverted(i) && num::Zero::is_zero(&v) {
                return Err(CommAlgError::ZeroAtInvertedVar(
                    self.source.vars()[i].name.clone(),
                ));
            }
            out.push(v);
        }
        Ok(out)
    }
}

/// Invert `λ·m` where every variable in the support of `m` is inverted in
/// the ring; returns `None` for anything that is not such a unit monomial.
fn invert_unit_monomial(ring: &PolyRing, p: &Poly) -> Option<Poly> {
    let mut terms = p.terms();
    let (m, c) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    let exps = Poly::monomial_exponents(ring, m);
    for (i, &e) in exps.iter().enumerate() {
        if e != 0 && !ring.is_inverted(i) {
            return None;
        }
    }
    let neg: Vec<i64> = exps.iter().map(|&e| -e).collect();
    let inv_m: Monomial = Poly::exponents_to_monomial(ring, &neg).ok()?;
    Some(Poly::from_term(inv_m, Coeff::one() / c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::poly::rat;

    /// f: k[t, D^{±1}] → k[s^{±1}], t ↦ 0, D ↦ s.
    fn boundary_map() -> AlgMap {
        let src = PolyRing::new(vec![("t", false), ("D", true)]).unwrap();
        let tgt = PolyRing::laurent(vec!["s"]).unwrap();
        AlgMap::new(src, tgt.clone(), vec![Poly::zero(), Poly::var(&tgt, 0)]).unwrap()
    }

    #[test]
    fn identity_extend_is_identity() {
        let r = PolyRing::new(vec![("t", true), ("D", true)]).unwrap();
        let id = AlgMap::identity(&r);
        let i = Ideal::new(
            r.clone(),
            vec![&Poly::var(&r, 1) - &Poly::from_int(&r, 5)],
        );
        let e = id.extend(&i).unwrap();
        assert!(e.equal(&i).unwrap());
        // contraction along the identity of a unit ideal is the unit ideal
        let u = id.contract(&Ideal::unit(r.clone())).unwrap();
        assert!(u.is_unit());
    }

    #[test]
    fn inverted_variable_needs_unit_image() {
        let src = PolyRing::laurent(vec!["u"]).unwrap();
        let tgt = PolyRing::new(vec![("t", false)]).unwrap();
        // u ↦ t is not a unit in ℚ[t]
        let bad = AlgMap::new(src.clone(), tgt.clone(), vec![Poly::var(&tgt, 0)]);
        assert!(bad.is_err());
        // u ↦ t⁻¹ in a Laurent target is fine
        let lt = PolyRing::laurent(vec!["t"]).unwrap();
        let ok = AlgMap::new(src, lt.clone(), vec![Poly::var_pow(&lt, 0, -1).unwrap()]);
        assert!(ok.is_ok());
    }

    #[test]
    fn extend_boundary_map_spec_cases() {
        let f = boundary_map();
        let src = f.source().clone();
        let d = Poly::var(&src, 1);
        let t = Poly::var(&src, 0);
        // ⟨D − μ⟩ ↦ ⟨s − μ⟩
        let i = Ideal::new(src.clone(), vec![&d - &Poly::from_int(&src, 5)]);
        let e = f.extend(&i).unwrap();
        let tgt = f.target().clone();
        let expect =
            Ideal::new(tgt.clone(), vec![&Poly::var(&tgt, 0) - &Poly::from_int(&tgt, 5)]);
        assert!(e.equal(&expect).unwrap());
        // ⟨t − λ⟩, λ ≠ 0 ↦ unit ideal
        let j = Ideal::new(src.clone(), vec![&t - &Poly::from_int(&src, 3)]);
        assert!(f.extend(&j).unwrap().is_unit());
        // ring mismatch is an error
        let other = Ideal::zero(PolyRing::plain(vec!["z"]).unwrap());
        assert!(f.extend(&other).is_err());
    }

    #[test]
    fn contract_along_laurent_inclusion() {
        // inclusion k[t, D^{±1}] ↪ k[t^{±1}, D^{±1}]
        let src = PolyRing::new(vec![("t", false), ("D", true)]).unwrap();
        let tgt = PolyRing::laurent(vec!["t", "D"]).unwrap();
        let incl = AlgMap::new(
            src.clone(),
            tgt.clone(),
            vec![Poly::var(&tgt, 0), Poly::var(&tgt, 1)],
        )
        .unwrap();
        // ⟨D − t⟩ contracts to ⟨D − t⟩
        let i = Ideal::new(tgt.clone(), vec![&Poly::var(&tgt, 1) - &Poly::var(&tgt, 0)]);
        let c = incl.contract(&i).unwrap();
        let expect =
            Ideal::new(src.clone(), vec![&Poly::var(&src, 1) - &Poly::var(&src, 0)]);
        assert!(c.equal(&expect).unwrap());
        // ⟨0⟩ contracts to ⟨0⟩
        let z = incl.contract(&Ideal::zero(tgt.clone())).unwrap();
        assert!(z.gens().is_empty());
        // ⟨D − μ⟩ (no t in sight) contracts to ⟨D − μ⟩
        let dmu = Ideal::new(tgt.clone(), vec![&Poly::var(&tgt, 1) - &Poly::from_int(&tgt, 7)]);
        let cd = incl.contract(&dmu).unwrap();
        let expect2 =
            Ideal::new(src.clone(), vec![&Poly::var(&src, 1) - &Poly::from_int(&src, 7)]);
        assert!(cd.equal(&expect2).unwrap());
    }

    #[test]
    fn contract_then_extend_shrinks() {
        // extend(m, contract(m, I)) ⊆ I
        let f = boundary_map();
        let tgt = f.target().clone();
        let s = Poly::var(&tgt, 0);
        for k in [2i64, 3, 7] {
            let i = Ideal::new(tgt.clone(), vec![&s - &Poly::from_int(&tgt, k)]);
            let back = f.extend(&f.contract(&i).unwrap()).unwrap();
            assert!(i.contains_ideal(&back).unwrap());
        }
    }

    #[test]
    fn pull_point_is_evaluation() {
        let f = boundary_map();
        let p = f.pull_point(&vec![rat(5, 1)]).unwrap();
        assert_eq!(p, vec![rat(0, 1), rat(5, 1)]);
    }
}
