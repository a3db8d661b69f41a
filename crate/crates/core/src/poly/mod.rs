//! Sparse multivariate polynomials over a [`crate::ff::Field`].

mod monomial;
mod multi;
mod roots;
mod text;

pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use multi::{MultiPoly, Multiplicity};
pub use roots::{is_z_root, z_roots_univariate};
pub use text::parse_poly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
