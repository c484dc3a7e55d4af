//! Exact commutative algebra over ℚ: multivariate and Laurent polynomial
//! rings, Buchberger's algorithm, elimination, saturation, and algebra maps
//! with ideal extension/contraction.

mod groebner;
mod ideal;
mod map;
mod order;
mod parse;
mod poly;
mod ring;

pub use groebner::{buchberger, reduce};
pub use ideal::{univariate_rational_roots, validate_point, Ideal};
pub use map::AlgMap;
pub use order::MonomialOrder;
pub use parse::{parse_poly, parse_rational};
pub use poly::{rat, Coeff, Point, Poly};
pub use ring::{Monomial, PolyRing, Var};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CommAlgError {
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("bad variable name `{0}`")]
    BadVariableName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` is not inverted; negative powers are not available")]
    NotInvertible(String),
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },
    #[error("expected {expected} variable images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of inverted variable `{var}` must be a unit monomial, got `{image}`")]
    NonUnitImage { var: String, image: String },
    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointDimension { expected: usize, got: usize },
    #[error("zero coordinate at inverted variable `{0}`")]
    ZeroAtInvertedVar(String),
    #[error("parse error: {0}")]
    Parse(String),
}
