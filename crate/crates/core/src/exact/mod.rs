//! Exact integer linear algebra: dense matrices, integer polynomials and
//! lattices in Hermite normal form. Nothing here touches floating point.

mod lattice;
mod matrix;
mod poly;

pub use lattice::{hnf_saturate, Lattice};
pub use matrix::{matrix_arithmetic, Matrix, MatrixOp};
pub use poly::{poly_divide, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular (determinant {determinant})")]
    NotUnimodular { determinant: String },
    #[error("divisor polynomial is not monic")]
    DivisorNotMonic,
    #[error("divisor polynomial is zero")]
    DivisorZero,
}
