//! Affine variety codes E(M, S) on product point ensembles.
//!
//! * [`ff`]: prime-power fields, subfield towers, linear algebra.
//! * [`poly`]: sparse multivariate polynomials, Hasse derivatives, multiplicity.
//! * [`codes`]: point ensembles, monomial sets, weighted Reed-Muller parameters, duals.
//! * [`zeros`]: zero-counting bounds with multiplicity.
//! * [`rsdec`]: Guruswami-Sudan for Reed-Solomon codes and the subfield-subcode route.
//! * [`mvdec`]: the direct multivariate list decoder.

pub mod channel;
pub mod codes;
pub mod ff;
pub mod mvdec;
pub mod poly;
pub mod report;
pub mod rsdec;
pub mod zeros;

mod error;

pub use error::Error;

/// Exact rationals used for weights and bound values.
pub type Rational = num_rational::Ratio<i64>;
