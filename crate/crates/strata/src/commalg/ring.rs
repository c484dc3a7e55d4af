//! Polynomial and Laurent polynomial rings over ℚ.
//!
//! A [`PolyRing`] is a list of named variables, each optionally flagged as
//! invertible. Invertible (Laurent) variables are handled by adjoining a
//! companion variable internally: for an inverted `x` there is a slot `x̂`
//! and every ideal implicitly contains the relation `x·x̂ − 1`. Exponent
//! vectors over the internal slots therefore stay nonnegative.

use std::fmt;

use super::CommAlgError;

/// A declared ring variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub name: String,
    pub inverted: bool,
}

/// A finitely presented (Laurent) polynomial ring over ℚ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyRing {
    vars: Vec<Var>,
    /// user index → internal slot of the companion variable, for inverted vars
    companions: Vec<Option<usize>>,
    internal_len: usize,
}

impl PolyRing {
    /// Build a ring from `(name, inverted)` pairs. Names must be unique,
    /// nonempty, and identifier-shaped (letter or `_` first, then
    /// alphanumerics or `_`).
    pub fn new<S: Into<String>>(vars: Vec<(S, bool)>) -> Result<Self, CommAlgError> {
        let vars: Vec<Var> = vars
            .into_iter()
            .map(|(n, inv)| Var { name: n.into(), inverted: inv })
            .collect();
        for v in &vars {
            let mut chars = v.name.chars();
            let ok = match chars.next() {
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
                }
                _ => false,
            };
            if !ok {
                return Err(CommAlgError::BadVariableName(v.name.clone()));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].iter().any(|w| w.name == v.name) {
                return Err(CommAlgError::DuplicateVariable(v.name.clone()));
            }
        }
        let n = vars.len();
        let mut companions = vec![None; n];
        let mut next = n;
        for (i, v) in vars.iter().enumerate() {
            if v.inverted {
                companions[i] = Some(next);
                next += 1;
            }
        }
        Ok(PolyRing { vars, companions, internal_len: next })
    }

    /// Shorthand: every listed variable inverted (a Laurent ring).
    pub fn laurent<S: Into<String>>(names: Vec<S>) -> Result<Self, CommAlgError> {
        Self::new(names.into_iter().map(|n| (n, true)).collect())
    }

    /// Shorthand: plain polynomial ring, nothing inverted.
    pub fn plain<S: Into<String>>(names: Vec<S>) -> Result<Self, CommAlgError> {
        Self::new(names.into_iter().map(|n| (n, false)).collect())
    }

    /// The ring ℚ itself (no variables).
    pub fn scalar() -> Self {
        PolyRing { vars: Vec::new(), companions: Vec::new(), internal_len: 0 }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn is_inverted(&self, i: usize) -> bool {
        self.vars[i].inverted
    }

    /// Number of internal exponent slots (user vars plus companions).
    pub fn internal_len(&self) -> usize {
        self.internal_len
    }

    /// Internal slot of the companion of user variable `i`, if inverted.
    pub fn companion(&self, i: usize) -> Option<usize> {
        self.companions[i]
    }

    /// For an internal slot, the user variable it belongs to and the sign
    /// it contributes to the Laurent exponent (+1 for the variable itself,
    /// −1 for its companion).
    pub fn slot_owner(&self, slot: usize) -> (usize, i64) {
        if slot < self.vars.len() {
            (slot, 1)
        } else {
            let user = self
                .companions
                .iter()
                .position(|c| *c == Some(slot))
                .expect("companion slot out of range");
            (user, -1)
        }
    }

    /// A variable name not already present, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        for k in 0.. {
            let cand = format!("{base}{k}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }

    /// The subring on the listed user variables (keeping their flags).
    pub fn subring(&self, keep: &[usize]) -> PolyRing {
        let vars = keep
            .iter()
            .map(|&i| (self.vars[i].name.clone(), self.vars[i].inverted))
            .collect();
        PolyRing::new(vars).expect("subring of a valid ring is valid")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", v.name)?;
            if v.inverted {
                write!(f, "^±1")?;
            }
        }
        write!(f, "]")
    }
}

/// An exponent vector over a ring's internal slots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(internal_len: usize) -> Self {
        Monomial(vec![0; internal_len])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Quotient exponents; caller must ensure `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}
