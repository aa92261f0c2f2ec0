//! Parabolic subalgebras, generalized Verma modules, nilradical weight data,
//! Condition A and compatibility tests, Kostant partition functions, and
//! branching multiplicities.

mod cone;
mod gvm;
mod multiplicity;
mod parabolic;
mod partition;

pub use cone::{quotient_weights, ConeReport};
pub use gvm::{GeneralizedVerma, GvmIndex, VermaVector};
pub use multiplicity::{
    branch_up_to_degree, branching_multiplicity, branching_multiplicity_at_offset,
    quasipoly_degree_bound, truncated_bar_gvm_character, truncated_gvm_character, BranchRow, Mult,
};
pub use parabolic::{induced_bar_parabolic, ParabolicSubalgebra};
pub use partition::{kostant_partition, kostant_partition_naive, PartitionContext, PartitionValue};
