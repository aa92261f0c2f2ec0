//! Root systems, Weyl groups, bilinear forms and weight bases for the simple
//! types, in the normalization where long roots have squared length 2 for
//! A, B, D, E, 4 for C and F4, and 6 for G2.

mod system;
mod weight;
mod weyl;

pub use system::{build_root_system, RootSystem, SystemTag};
pub use weight::{parse_weight, pretty_fundamental, Basis, Weight};
pub use weyl::{rho, weyl_dimension, weyl_group, WeylElement};

pub(crate) use system::root_cmp;

/// Exact inverse of a small rational matrix; None if singular.
pub fn invert_matrix(
    m: &[Vec<crate::arith::Rational>],
) -> Option<Vec<Vec<crate::arith::Rational>>> {
    system::invert(m)
}
