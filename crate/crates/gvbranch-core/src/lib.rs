//! Exact-arithmetic branching of generalized Verma modules over reductive
//! subalgebra embeddings.
//!
//! The crate computes characters, branching multiplicities, cone/condition
//! reports and explicit singular vectors for generalized Verma modules
//! restricted along an embedding of reductive Lie algebras, with the pair
//! G2 in so(7) fully built in. All arithmetic is exact: arbitrary-precision
//! rationals, multivariate polynomials and rational functions in named
//! parameters.

pub mod arith;
pub mod error;
pub mod fdmod;
pub mod lie;
pub mod pair;
pub mod regress;
pub mod roots;
pub mod singular;
pub mod verma;

pub use error::{Error, Result};
