//! strata — finite stratifications of spectra, exactly.
//!
//! The crate models spaces that are glued from finitely many strata along
//! transfer maps between their lattices of closed sets, in the style of the
//! stratified prime and primitive spectra of quantum algebras:
//!
//! * [`commalg`] — exact commutative algebra over ℚ (Gröbner bases,
//!   elimination, Laurent rings, ideal extension/contraction along algebra
//!   maps);
//! * [`qtorus`] — q-commutation matrices and centers of quantum tori as
//!   integer kernel lattices;
//! * [`poset`] — finite posets, cover relations, heights;
//! * [`topology`] — closed-set systems, stratification axioms, transfer
//!   maps, the glued-topology construction and closure computations;
//! * [`catalog`] — fully worked models of quantum-plane, quantum-GL₂, and
//!   quantum-matrix stratifications, plus the 36-element H-prime poset of
//!   quantum SL₃ with its quantum-minor symmetries.

pub mod catalog;
pub mod commalg;
pub mod poset;
pub mod qtorus;
pub mod topology;
