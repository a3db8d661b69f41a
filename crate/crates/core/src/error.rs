use thiserror::Error;

use crate::codes::CodesError;
use crate::ff::{FieldError, MatrixError};
use crate::mvdec::MvdecError;
use crate::poly::PolyError;
use crate::rsdec::RsdecError;
use crate::zeros::ZerosError;

/// Any error raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Codes(#[from] CodesError),
    #[error(transparent)]
    Zeros(#[from] ZerosError),
    #[error(transparent)]
    Rsdec(#[from] RsdecError),
    #[error(transparent)]
    Mvdec(#[from] MvdecError),
}
