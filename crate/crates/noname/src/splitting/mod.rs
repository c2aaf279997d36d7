//! The Galois extension K = Base[t]/(m(t)): field arithmetic, explicit
//! automorphisms, presentation verification and normal elements.

pub mod field;
pub mod galois;
pub mod normal;

pub use field::{FieldDescriptor, FieldElement, IrreducibilityStatus};
pub use galois::{
    frobenius, frobenius_presentation, Automorphism, GaloisPresentation, PresentationReport,
};
pub use normal::{conjugate_matrix, find_normal, is_normal};
