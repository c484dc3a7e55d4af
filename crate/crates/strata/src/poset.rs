//! Finite labeled posets: validation, cover relations, heights.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// A finite relation on string labels, intended to be a partial order.
/// Elements are kept in lexicographic order so every traversal and export
/// is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    /// row-major `n×n`: `leq[i*n + j]` ⟺ `elements[i] ≤ elements[j]`
    leq: Vec<bool>,
}

/// One violation of the partial-order axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetViolation {
    NotReflexive { element: String },
    NotAntisymmetric { a: String, b: String },
    NotTransitive { a: String, b: String, c: String },
}

impl fmt::Display for PosetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetViolation::NotReflexive { element } => {
                write!(f, "reflexivity fails: {element} ≤ {element} missing")
            }
            PosetViolation::NotAntisymmetric { a, b } => {
                write!(f, "antisymmetry fails: {a} ≤ {b} and {b} ≤ {a} with {a} ≠ {b}")
            }
            PosetViolation::NotTransitive { a, b, c } => {
                write!(f, "transitivity fails: {a} ≤ {b} ≤ {c} but not {a} ≤ {c}")
            }
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("relation mentions element `{0}` not in the element list")]
    RelationElement(String),
    #[error("not a partial order: {0} violation(s), first: {1}")]
    Invalid(usize, PosetViolation),
}

impl Poset {
    /// Build from elements and a list of `a ≤ b` pairs. Reflexive pairs are
    /// added automatically; nothing else is inferred, so a non-transitive
    /// input stays non-transitive and will show up in [`Poset::validate`].
    pub fn new<S: Into<String>, T: AsRef<str>>(
        elements: Vec<S>,
        pairs: &[(T, T)],
    ) -> Result<Self, PosetError> {
        let mut elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        let idx = |name: &str| -> Result<usize, PosetError> {
            elements
                .binary_search_by(|e| e.as_str().cmp(name))
                .map_err(|_| PosetError::RelationElement(name.to_string()))
        };
        for (a, b) in pairs {
            let i = idx(a.as_ref())?;
            let j = idx(b.as_ref())?;
            leq[i * n + j] = true;
        }
        Ok(Poset { elements, leq })
    }

    /// Like [`Poset::new`] but closes the relation transitively, for inputs
    /// that list covers only.
    pub fn from_covers<S: Into<String>, T: AsRef<str>>(
        elements: Vec<S>,
        covers: &[(T, T)],
    ) -> Result<Self, PosetError> {
        let mut p = Poset::new(elements, covers)?;
        let n = p.elements.len();
        // Floyd–Warshall style closure
        for k in 0..n {
            for i in 0..n {
                if p.leq[i * n + k] {
                    for j in 0..n {
                        if p.leq[k * n + j] {
                            p.leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(name)).ok()
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool, PosetError> {
        let i = self.index_of(a).ok_or_else(|| PosetError::UnknownElement(a.to_string()))?;
        let j = self.index_of(b).ok_or_else(|| PosetError::UnknownElement(b.to_string()))?;
        Ok(self.leq_idx(i, j))
    }

    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        i != j && self.leq_idx(i, j)
    }

    /// All partial-order violations; empty iff this is a poset.
    pub fn validate(&self) -> Vec<PosetViolation> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            if !self.leq_idx(i, i) {
                out.push(PosetViolation::NotReflexive { element: self.elements[i].clone() });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq_idx(i, j) && self.leq_idx(j, i) {
                    out.push(PosetViolation::NotAntisymmetric {
                        a: self.elements[i].clone(),
                        b: self.elements[j].clone(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq_idx(i, j) {
                    continue;
                }
                for k in 0..n {
                    if k != j && self.leq_idx(j, k) && !self.leq_idx(i, k) {
                        out.push(PosetViolation::NotTransitive {
                            a: self.elements[i].clone(),
                            b: self.elements[j].clone(),
                            c: self.elements[k].clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn require_valid(&self) -> Result<(), PosetError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            let n = v.len();
            Err(PosetError::Invalid(n, v.into_iter().next().unwrap()))
        }
    }

    /// Cover pairs `(a, b)`: `a < b` with nothing strictly between.
    /// Sorted by label pair.
    pub fn covers(&self) -> Result<Vec<(String, String)>, PosetError> {
        self.require_valid()?;
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.lt_idx(i, j) {
                    continue;
                }
                let intermediate =
                    (0..n).any(|k| k != i && k != j && self.lt_idx(i, k) && self.lt_idx(k, j));
                if !intermediate {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// All strictly comparable pairs `(a, b)` with `a < b`, sorted.
    pub fn strict_pairs(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt_idx(i, j) {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Length of the longest chain strictly below each element.
    pub fn heights(&self) -> Result<Vec<usize>, PosetError> {
        self.require_valid()?;
        let n = self.len();
        let mut h = vec![0usize; n];
        // elements sorted by number of strict predecessors give a linear
        // extension to sweep
        let mut order: Vec<usize> = (0..n).collect();
        let pred_count =
            |i: usize| (0..n).filter(|&k| self.lt_idx(k, i)).count();
        order.sort_by_key(|&i| pred_count(i));
        for &i in &order {
            h[i] = (0..n)
                .filter(|&k| self.lt_idx(k, i))
                .map(|k| h[k] + 1)
                .max()
                .unwrap_or(0);
        }
        Ok(h)
    }

    /// Elements ≥ the given one (upward closure), as indices.
    pub fn up_set(&self, i: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&j| self.leq_idx(i, j)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_valid_total_order() {
        let p = Poset::new(vec!["0", "1", "2"], &[("0", "1"), ("1", "2"), ("0", "2")]).unwrap();
        assert!(p.is_valid());
        assert_eq!(
            p.covers().unwrap(),
            vec![("0".to_string(), "1".to_string()), ("1".to_string(), "2".to_string())]
        );
        assert_eq!(p.heights().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn antisymmetry_violation_detected() {
        let p = Poset::new(vec!["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let v = p.validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, PosetViolation::NotAntisymmetric { .. })));
        assert!(p.covers().is_err());
    }

    #[test]
    fn transitivity_violation_detected() {
        let p = Poset::new(vec!["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let v = p.validate();
        assert!(v
            .iter()
            .any(|x| matches!(x, PosetViolation::NotTransitive { .. })));
        let closed = Poset::from_covers(vec!["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(closed.is_valid());
    }

    #[test]
    fn diamond_covers() {
        // four H-primes of quantum GL₂: 0 < b, c < bc
        let p = Poset::from_covers(
            vec!["0", "b", "c", "bc"],
            &[("0", "b"), ("0", "c"), ("b", "bc"), ("c", "bc")],
        )
        .unwrap();
        assert!(p.is_valid());
        let cov = p.covers().unwrap();
        assert_eq!(cov.len(), 4);
        assert!(cov.contains(&("0".to_string(), "b".to_string())));
        assert!(cov.contains(&("c".to_string(), "bc".to_string())));
        assert!(!cov.contains(&("0".to_string(), "bc".to_string())));
        assert_eq!(p.heights().unwrap()[p.index_of("bc").unwrap()], 2);
    }

    #[test]
    fn unknown_relation_element_rejected() {
        assert!(Poset::new(vec!["a"], &[("a", "zzz")]).is_err());
    }
}
