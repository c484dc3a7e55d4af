//! Buchberger's algorithm and multivariate division.
//!
//! Pair management follows Gebauer–Möller: the product criterion, the
//! divisor ("M"/"F") criteria on freshly created pairs, and the chain
//! ("B") criterion on surviving old pairs. Selection is the normal
//! strategy — smallest lcm degree first — which keeps elimination orders
//! from blowing up. The output is the reduced, monic Gröbner basis sorted
//! ascending by leading monomial, which is unique for a fixed order, so
//! equality of ideals is equality of these bases.

use num::One;

use super::order::MonomialOrder;
use super::poly::{Coeff, Poly};
use super::ring::Monomial;

/// Full normal form of `f` modulo `basis`: no term of the remainder is
/// divisible by any basis leading monomial.
pub fn reduce(f: &Poly, basis: &[Poly], order: &MonomialOrder) -> Poly {
    let lts: Vec<(&Monomial, &Coeff)> =
        basis.iter().filter_map(|g| g.leading_term(order)).collect();
    let mut rem = Poly::zero();
    let mut p = f.clone();
    'outer: while let Some((lm, lc)) = p.leading_term(order) {
        let lm = lm.clone();
        let lc = lc.clone();
        for (i, (glm, glc)) in lts.iter().enumerate() {
            if glm.divides(&lm) {
                let q = lm.div(glm);
                let c = &lc / *glc;
                p = &p - &basis[i].mul_term(&q, &c);
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        rem.add_term(lm.clone(), lc.clone());
        let mut tail = p;
        tail.add_term(lm, -lc);
        p = tail;
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly, order: &MonomialOrder) -> Poly {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm), &(Coeff::one() / fc.clone()));
    let b = g.mul_term(&l.div(gm), &(Coeff::one() / gc.clone()));
    &a - &b
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller update: prune the pending pairs against the new basis
/// element `t`, then add the surviving new pairs `(i, t)`.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Monomial], t: usize) {
    let lmt = &lms[t];

    // chain criterion on old pairs: (i,j) is redundant once LM_t divides
    // lcm(i,j) strictly finer than both mixed lcms
    pairs.retain(|p| {
        if !lmt.divides(&p.lcm) {
            return true;
        }
        let lit = lms[p.i].lcm(lmt);
        let ljt = lms[p.j].lcm(lmt);
        lit == p.lcm || ljt == p.lcm
    });

    // candidate pairs (i, t)
    let cand: Vec<Pair> = (0..t)
        .map(|i| Pair { i, j: t, lcm: lms[i].lcm(lmt) })
        .collect();

    // divisor criterion: drop (i,t) when some (j,t) has a strictly
    // smaller lcm dividing it
    let survives_m: Vec<bool> = cand
        .iter()
        .map(|p| {
            !cand
                .iter()
                .any(|q| q.lcm != p.lcm && q.lcm.divides(&p.lcm))
        })
        .collect();

    // among equal lcms keep a single representative, preferring a pair
    // that the product criterion kills (then the whole class goes)
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cand.into_iter().enumerate() {
        if !survives_m[k] {
            continue;
        }
        if let Some(prev) = kept.iter_mut().find(|q| q.lcm == p.lcm) {
            if lms[p.i].coprime(lmt) {
                *prev = p; // remember the coprime representative
            }
            continue;
        }
        kept.push(p);
    }

    // product criterion
    kept.retain(|p| !lms[p.i].coprime(lmt));

    pairs.extend(kept);
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &MonomialOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let push = |p: Poly,
                    basis: &mut Vec<Poly>,
                    lms: &mut Vec<Monomial>,
                    pairs: &mut Vec<Pair>| {
        let lm = p.leading_term(order).expect("nonzero").0.clone();
        basis.push(p);
        lms.push(lm);
        update_pairs(pairs, lms, basis.len() - 1);
    };

    let mut seeds: Vec<Poly> = gens.to_vec();
    seeds.sort_by(|a, b| match (a.leading_term(order), b.leading_term(order)) {
        (Some((la, _)), Some((lb, _))) => order.cmp(la, lb),
        _ => std::cmp::Ordering::Equal,
    });
    for g in &seeds {
        if g.is_zero() {
            continue;
        }
        let r = reduce(g, &basis, order);
        if !r.is_zero() {
            push(r.monic(order), &mut basis, &mut lms, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree, ties broken by the order
        // and the indices, so runs are deterministic
        let mut best = 0usize;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let cmp = a
                .lcm
                .total_degree()
                .cmp(&b.lcm.total_degree())
                .then_with(|| order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if cmp == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly(&basis[pair.i], &basis[pair.j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            push(r.monic(order), &mut basis, &mut lms, &mut pairs);
        }
    }

    inter_reduce(basis, order)
}

/// Minimalize and fully reduce a basis; sort ascending by leading monomial.
fn inter_reduce(mut basis: Vec<Poly>, order: &MonomialOrder) -> Vec<Poly> {
    // drop elements whose leading monomial another element's divides
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lmi = basis[i].leading_term(order).unwrap().0.clone();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lmj = basis[j].leading_term(order).unwrap().0;
            if lmj.divides(&lmi) && (lmj != &lmi || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Poly> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();

    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        let la = a.leading_term(order).unwrap().0;
        let lb = b.leading_term(order).unwrap().0;
        order.cmp(la, lb)
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commalg::poly::rat;
    use crate::commalg::ring::PolyRing;

    fn xy() -> PolyRing {
        PolyRing::plain(vec!["x", "y"]).unwrap()
    }

    #[test]
    fn reduce_by_circle() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let order = MonomialOrder::GrevLex;
        // x^2 + y^2 - 1
        let g = &(&(&x * &x) + &(&y * &y)) - &Poly::one(&r);
        let f = &(&x * &x) + &Poly::one(&r);
        let nf = reduce(&f, &[g.monic(&order)], &order);
        // x^2 + 1 ≡ -y^2 + 2 mod (x^2 + y^2 - 1)
        let expected = &Poly::from_int(&r, 2) - &(&y * &y);
        assert_eq!(nf, expected);
    }

    #[test]
    fn twisted_cubic_style_membership() {
        // spec example: ⟨x²−y, y²−x⟩, x⁴−x ∈ I since
        // x⁴−x = (x²+y)(x²−y) + (y²−x)
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let g1 = &(&x * &x) - &y;
        let g2 = &(&y * &y) - &x;
        let order = MonomialOrder::GrevLex;
        let gb = buchberger(&[g1, g2], &order);
        let x2 = &x * &x;
        let f = &(&x2 * &x2) - &x;
        assert!(reduce(&f, &gb, &order).is_zero());
        assert!(!reduce(&x, &gb, &order).is_zero());
    }

    #[test]
    fn unit_ideal_reduces_to_one() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let gb = buchberger(&[x.clone(), &x - &Poly::one(&r)], &MonomialOrder::GrevLex);
        assert_eq!(gb.len(), 1);
        assert!(gb[0].is_nonzero_constant());
    }

    #[test]
    fn reduced_basis_is_generator_order_invariant() {
        let r = xy();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let order = MonomialOrder::GrevLex;
        let g1 = &(&x * &x) - &y;
        let g2 = &(&y * &y) - &x;
        let g3 = (&(&x * &y) - &Poly::one(&r)).scale(&rat(7, 3));
        let a = buchberger(&[g1.clone(), g2.clone(), g3.clone()], &order);
        let b = buchberger(&[g3, g1, g2], &order);
        assert_eq!(a, b);
        let again = buchberger(&a, &order);
        assert_eq!(a, again);
    }

    #[test]
    fn katsura_like_system_terminates() {
        // a denser system to exercise the pair criteria
        let r = PolyRing::plain(vec!["x", "y", "z"]).unwrap();
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let z = Poly::var(&r, 2);
        let one = Poly::one(&r);
        let g1 = &(&(&x + &y) + &z) - &one; // x+y+z-1
        let g2 = &(&(&(&x * &x) + &(&y * &y)) + &(&z * &z)) - &x;
        let g3 = &(&(&x * &y) + &(&y * &z)) - &(&z * &z);
        let gb = buchberger(&[g1, g2, g3], &MonomialOrder::GrevLex);
        assert!(!gb.is_empty());
        // the basis reduces its own S-polynomials to zero
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_poly(&gb[i], &gb[j], &MonomialOrder::GrevLex);
                assert!(reduce(&s, &gb, &MonomialOrder::GrevLex).is_zero());
            }
        }
    }
}
