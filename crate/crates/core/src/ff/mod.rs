//! Finite fields, subfield towers and dense linear algebra.

mod field;
mod matrix;
mod tower;

pub use field::{binomial_mod, Field, FieldDescriptor, Gf, MAX_FIELD_SIZE};
pub use matrix::{solve, Echelon, Matrix, Solution, SolveMode};
pub use tower::{LinearizedPoly, Tower};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),
    #[error("GF({p}^{k}) exceeds the supported size of 2^16 elements")]
    TooLarge { p: u32, k: u32 },
    #[error("modulus {0:?} is not monic of the right degree over GF(p)")]
    BadModulus(Vec<u32>),
    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error("no primitive modulus found for GF({p}^{k})")]
    NoModulus { p: u32, k: u32 },
    #[error("GF({small}) is not a subfield of GF({big})")]
    IncompatibleDegrees { small: u32, big: u32 },
    #[error("basis is linearly dependent over the subfield")]
    DependentBasis,
    #[error("expected {expected} coordinates, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("element {0} does not lie in the field")]
    NotInField(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("kernel is trivial (rank {rank} = cols {cols})")]
    TrivialKernel { rank: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}
