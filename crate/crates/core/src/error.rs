use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error(
        "intersection form is not symmetric (entry ({row}, {col}) differs from its transpose)"
    )]
    NotSymmetric { row: usize, col: usize },

    #[error("intersection form has determinant {det}, expected ±1")]
    NotUnimodular { det: BigInt },

    #[error("intersection form has rank 0 (S^4); circle bundles need H^2 != 0")]
    EmptyForm,

    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis change matrix has determinant {det}, expected ±1")]
    NotUnimodularChange { det: BigInt },

    #[error("Euler class is not primitive: divisibility {divisibility}")]
    NonPrimitive { divisibility: BigInt },
}
