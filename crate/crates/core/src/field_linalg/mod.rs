//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod rref;
mod subspace;

pub use field::{Backend, Field, FieldElement, Prime};
pub use matrix::MatrixFp;
pub use rref::{nullspace, rref, Rref};
pub use subspace::{contains, subspace_intersect, subspace_leq, subspace_sum, Subspace};
