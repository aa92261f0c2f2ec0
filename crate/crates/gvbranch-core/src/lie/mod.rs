//! Chevalley–Weyl structure constants, enveloping-algebra words, subalgebra
//! generation, the G2 in so(7) embedding, weight projection and quadratic
//! Casimir elements.

mod algebra;
mod casimir;
mod embedding;
mod field;
mod subalgebra;
mod uea;

pub use algebra::{build_algebra, ChevalleyAlgebra, Gen};
pub use casimir::casimir_quadratic;
pub use embedding::{build_embedding, build_embedding_g2_so7, embed_uea, Embedding};
pub use subalgebra::{generate_subalgebra, SubalgebraReport};
pub use uea::{normal_form, parse_uea, transpose_antiautomorphism, UEAElement, Word};

/// Exact linear solver over the rationals, shared with the module layers.
pub type ColumnSolverRat = field::ColumnSolver<crate::arith::Rational>;
