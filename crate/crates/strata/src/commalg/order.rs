//! Monomial orders: graded reverse lexicographic, and block orders for
//! elimination.

use std::cmp::Ordering;

use super::ring::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic over all internal slots.
    GrevLex,
    /// Block order: grevlex on the masked slots first, grevlex on the rest
    /// as tiebreak. Any monomial touching a masked slot is greater than any
    /// monomial that does not, which is what elimination needs.
    Elim { eliminate: Vec<bool> },
}

fn grevlex_masked(a: &Monomial, b: &Monomial, mask: Option<&[bool]>) -> Ordering {
    let in_mask = |i: usize| mask.map_or(true, |m| m[i]);
    let deg = |m: &Monomial| -> u64 {
        m.0.iter()
            .enumerate()
            .filter(|(i, _)| in_mask(*i))
            .map(|(_, &e)| e as u64)
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // reverse lex: rightmost differing slot, smaller exponent wins
    for i in (0..a.0.len()).rev() {
        if !in_mask(i) {
            continue;
        }
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::GrevLex => grevlex_masked(a, b, None),
            MonomialOrder::Elim { eliminate } => {
                match grevlex_masked(a, b, Some(eliminate)) {
                    Ordering::Equal => {
                        let rest: Vec<bool> = eliminate.iter().map(|&x| !x).collect();
                        grevlex_masked(a, b, Some(&rest))
                    }
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial(v.to_vec())
    }

    #[test]
    fn grevlex_classic() {
        let o = MonomialOrder::GrevLex;
        // deg first
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Greater);
        // x^2 y > x y^2 in grevlex (rightmost smaller wins)
        assert_eq!(o.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // x > y
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn elim_block_dominates() {
        let o = MonomialOrder::Elim { eliminate: vec![true, false] };
        // x (eliminated) beats y^5
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 5]), &m(&[0, 2])), Ordering::Greater);
    }
}
