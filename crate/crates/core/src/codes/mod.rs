//! Point ensembles, monomial sets, code matrices and the parameter
//! formulas for weighted Reed-Muller codes and their duals.

mod code;
mod descriptor;
mod ensemble;
mod fengrao;
mod monoset;
mod params;

pub use code::{distance_witness, CodeSpec, FootprintDistance, Sense};
pub use descriptor::{CodeDescriptor, SetSpec, Q};
pub use ensemble::{IndexTuples, PointEnsemble};
pub use fengrao::FengRaoContext;
pub use monoset::{border, exponent_box, footprint, MonomialSet, SetKind};
pub use params::{
    dominance_check, dual_designed_distance, dual_wrm, exto_curve, optimal_w2, region_dimensions, wrm_distance_formula,
    wrm_distance_multivar, CurvePoint, DistanceBound, Dominance, DominanceVerdict, Region, RegionReport,
};

use thiserror::Error;

use crate::ff::{FieldError, MatrixError};
use crate::poly::{Monomial, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodesError {
    #[error("bad point ensemble: {0}")]
    Ensemble(String),
    #[error("monomial {0} breaks the exponent cap of the ensemble")]
    ExponentCap(Monomial),
    #[error("bad parameters: {0}")]
    Params(String),
    #[error("u = {u} is outside the admissible range ({range})")]
    OutOfRange { u: String, range: String },
    #[error("operation needs a primal code")]
    NotPrimal,
    #[error("the monomial set covers the whole exponent box, the dual is the zero code")]
    FullBox,
    #[error("instance too large for the oracle: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
