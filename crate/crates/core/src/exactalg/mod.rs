//! Exact integer and mod-2 linear algebra.

mod group;
mod matrix;
mod mod2;
mod smith;

pub use group::{cokernel, content, kernel_basis, rank, FgAbelianGroup};
pub use matrix::IntegerMatrix;
pub use mod2::{solve_mod2, Mod2Matrix};
pub use smith::{smith_normal_form, SmithDecomposition};
