//! Harish-Chandra scalars, Condition B tests, Casimir-projector construction
//! of singular vectors in generalized Verma modules, verification, and
//! Shapovalov-norm certificates.

mod build;
mod certificate;
mod scalars;

pub use build::{
    build_singular_vector, top_level_singular_vectors, verify_singular, SingularVectorResult,
    VerificationReport,
};
pub use certificate::{shapovalov_certificate, ShapovalovCertificate};
pub use scalars::{p1_scalar, strong_condition_b, CasimirScalar, ConditionBReport};
