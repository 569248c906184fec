//! Exact scalar arithmetic and linear algebra shared by every other module.

pub mod matrix;
pub mod scalar;
pub mod snf;

pub use matrix::{ExactMatrix, Matrix};
pub use scalar::{FieldSpec, RingElem, Scalar};
pub use snf::{int_matrix, invariant_factors, smith_normal_form, IntMatrix};
