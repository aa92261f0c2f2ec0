//! Finite-dimensional highest-weight modules over reductive Levi
//! subalgebras: monomial bases indexed by adapted strings, exact action
//! matrices through the Shapovalov form, Freudenthal characters, character
//! projection along an embedding, and decomposition over the induced Levi.

mod branch;
mod character;
mod crystal;
mod module;

pub use branch::{annihilated_by, constituent_dimension, decompose_over_bar_levi, fd_singular_vectors, project_character, Constituent};
pub use character::{freudenthal_character, Character};
pub use crystal::{crystal_type, lex_min_longest_word, Crystal, CrystalType};
pub use module::{build_fd_module, pbw_offset, BasisWord, FiniteModule, PbwMono, PbwVec, WeightSpace};
