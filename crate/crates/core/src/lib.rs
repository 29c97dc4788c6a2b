//! Circle bundles over simply-connected topological 4-manifolds.
//!
//! A closed 1-connected 4-manifold `M` is modelled by the Gram matrix of its
//! intersection form on `H²(M;Z)`. An oriented circle bundle over `M` is
//! determined by its Euler class `α ∈ H²(M;Z)`. From the pair `(M, α)` this
//! crate computes
//!
//! * the integral cohomology `H⁰..H⁵` of the total space `M(α)` and its
//!   fundamental group, from the Gysin sequence ([`gysin`]);
//! * whether `M(α)` is spin, from the mod-2 Gysin sequence ([`gysin`]);
//! * for primitive `α`, the homeomorphism type of `M(α)`: either a connected
//!   sum of copies of `S²×S³`, or the non-spin manifold `B` summed with such
//!   copies ([`classify`]).
//!
//! All arithmetic is exact and arbitrary precision ([`exactalg`]).

pub mod classify;
pub mod error;
pub mod exactalg;
pub mod fourmanifold;
pub mod gysin;

pub use classify::{
    classify, enumerate_primitive, find_spin_euler_class, s2_bundle, FiveManifoldKind,
    FiveManifoldType, PrimitiveClasses, ThreeManifold,
};
pub use error::{Error, Result};
pub use exactalg::{
    cokernel, content, kernel_basis, smith_normal_form, solve_mod2, FgAbelianGroup, IntegerMatrix,
    Mod2Matrix, SmithDecomposition,
};
pub use fourmanifold::{Block, FourManifold, Mod2Class};
pub use gysin::{
    cohomology, cup_alpha_matrix, divisibility, is_total_space_spin, CohomologyProfile, EulerClass,
};
