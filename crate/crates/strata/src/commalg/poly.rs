//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use super::order::MonomialOrder;
use super::ring::{Monomial, PolyRing};
use super::CommAlgError;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A rational point, one coordinate per user variable of the ambient ring.
pub type Point = Vec<Coeff>;

/// Sparse polynomial: monomial → nonzero coefficient.
///
/// The exponent vectors run over a ring's internal slots; a `Poly` does not
/// carry its ring, operations that need one take it as an argument.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(ring: &PolyRing, c: Coeff) -> Self {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(ring.internal_len()), c);
        p
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn from_int(ring: &PolyRing, n: i64) -> Self {
        Self::constant(ring, Coeff::from_integer(n.into()))
    }

    /// The user variable `i` as a polynomial.
    pub fn var(ring: &PolyRing, i: usize) -> Self {
        let mut m = Monomial::one(ring.internal_len());
        m.0[i] = 1;
        Poly::from_term(m, Coeff::one())
    }

    /// `x_i^k` for any integer `k`; negative powers use the companion slot.
    pub fn var_pow(ring: &PolyRing, i: usize, k: i64) -> Result<Self, CommAlgError> {
        let mut m = Monomial::one(ring.internal_len());
        if k >= 0 {
            m.0[i] = k as u32;
        } else {
            let slot = ring
                .companion(i)
                .ok_or_else(|| CommAlgError::NotInvertible(ring.vars()[i].name.clone()))?;
            m.0[slot] = (-k) as u32;
        }
        Ok(Poly::from_term(m, Coeff::one()))
    }

    pub fn from_term(m: Monomial, c: Coeff) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// Nonzero constant (a unit of any polynomial ring)?
    pub fn is_nonzero_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn as_constant(&self) -> Option<&Coeff> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c);
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Divide through by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => Poly::zero(),
            Some((_, lc)) => {
                let inv = Coeff::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Evaluate at a rational point (one coordinate per user variable).
    /// Companion slots evaluate at the coordinate's inverse; a zero
    /// coordinate on an inverted variable is rejected.
    pub fn eval(&self, ring: &PolyRing, point: &[Coeff]) -> Result<Coeff, CommAlgError> {
        if point.len() != ring.n_vars() {
            return Err(CommAlgError::PointDimension {
                expected: ring.n_vars(),
                got: point.len(),
            });
        }
        for (i, v) in ring.vars().iter().enumerate() {
            if v.inverted && point[i].is_zero() {
                return Err(CommAlgError::ZeroAtInvertedVar(v.name.clone()));
            }
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (slot, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (user, sign) = ring.slot_owner(slot);
                let base = if sign > 0 {
                    point[user].clone()
                } else {
                    Coeff::one() / point[user].clone()
                };
                term *= num::pow::pow(base, e as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Cancel `x`/`x̂` pairs inside each monomial (the rewrite `x·x̂ → 1`).
    /// This changes the polynomial only modulo the ring's Laurent relations;
    /// it is used when normalizing ideal generators and for display.
    pub fn laurent_canonical(&self, ring: &PolyRing) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut m = m.clone();
            for i in 0..ring.n_vars() {
                if let Some(slot) = ring.companion(i) {
                    let k = m.0[i].min(m.0[slot]);
                    m.0[i] -= k;
                    m.0[slot] -= k;
                }
            }
            out.add_term(m, c.clone());
        }
        out
    }

    /// The Laurent exponent vector of a monomial of this ring
    /// (companion exponents count negatively).
    pub fn monomial_exponents(ring: &PolyRing, m: &Monomial) -> Vec<i64> {
        let mut v = vec![0i64; ring.n_vars()];
        for (slot, &e) in m.0.iter().enumerate() {
            if e != 0 {
                let (user, sign) = ring.slot_owner(slot);
                v[user] += sign * e as i64;
            }
        }
        v
    }

    /// Monomial of this ring with the given Laurent exponents.
    pub fn exponents_to_monomial(
        ring: &PolyRing,
        exps: &[i64],
    ) -> Result<Monomial, CommAlgError> {
        let mut m = Monomial::one(ring.internal_len());
        for (i, &e) in exps.iter().enumerate() {
            if e >= 0 {
                m.0[i] = e as u32;
            } else {
                let slot = ring
                    .companion(i)
                    .ok_or_else(|| CommAlgError::NotInvertible(ring.vars()[i].name.clone()))?;
                m.0[slot] = (-e) as u32;
            }
        }
        Ok(m)
    }

    /// Re-express a (Laurent-canonical) polynomial of `from` in `to`,
    /// matching variables by name.
    pub fn convert(&self, from: &PolyRing, to: &PolyRing) -> Result<Poly, CommAlgError> {
        let mut out = Poly::zero();
        for (m, c) in self.laurent_canonical(from).terms {
            let exps = Poly::monomial_exponents(from, &m);
            let mut new_exps = vec![0i64; to.n_vars()];
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &from.vars()[i].name;
                let j = to
                    .var_index(name)
                    .ok_or_else(|| CommAlgError::UnknownVariable(name.clone()))?;
                new_exps[j] = e;
            }
            out.add_term(Poly::exponents_to_monomial(to, &new_exps)?, c);
        }
        Ok(out)
    }

    /// Render using the ring's variable names; companion slots print as
    /// negative exponents. Terms are listed grevlex-descending.
    pub fn render(&self, ring: &PolyRing) -> String {
        let canon = self.laurent_canonical(ring);
        if canon.is_zero() {
            return "0".to_string();
        }
        let order = MonomialOrder::GrevLex;
        let mut monos: Vec<&Monomial> = canon.terms.keys().collect();
        monos.sort_by(|a, b| order.cmp(b, a));
        let mut out = String::new();
        for (k, m) in monos.iter().enumerate() {
            let c = &canon.terms[*m];
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            let exps = Poly::monomial_exponents(ring, m);
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = &ring.vars()[i].name;
                if e == 1 {
                    factors.push(name.clone());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Rational from an integer pair, for tests and builders.
pub fn rat(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}
