//! Exact-arithmetic toolkit for finite group-scheme quotients.
//!
//! What lives where:
//! - [`exact`]: prime-field/rational scalars, kernels, determinants
//!   (fraction-free), Smith normal form over arbitrary-precision integers.
//! - [`poly`]: sparse multivariate polynomials over the ground field with a
//!   hard degree cap and the textual syntax used by the CLI.
//! - [`hopf`]: finite-dimensional Hopf algebras by structure constants;
//!   axiom validation, Cartier duality, left integrals, the group trace
//!   Tr_G, and constructors for constant groups, diagonalizable groups,
//!   μ_n, α_{p^e}, and products.
//! - [`gaction`]: coacted free algebras S/R, the relative trace Tr_{S/R},
//!   its bilinear matrix and discriminant, torsor and tameness tests.
//! - [`toric`]: affine semigroup rings, divisors, section modules,
//!   divisor index, Veronese subrings, cyclic covers, class groups.
//! - [`fsig`]: Frobenius splitting numbers, F-signature estimates, and the
//!   transformation-rule / torsion-bound verifiers.
//!
//! The `parallel` feature (default) backs the splitting-number kernel and
//! the heavy axiom checks with rayon; disabling it yields a fully
//! sequential build with identical outputs.

pub mod error;
pub mod exact;
pub mod fsig;
pub mod gaction;
pub mod hopf;
pub mod jsonio;
pub mod par;
pub mod poly;
pub mod toric;

pub use error::{Error, Result};
