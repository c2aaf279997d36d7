//! Exact construction of transcendence bases for the invariant fields
//! K(x_1, ..., x_n)^G of permutation and sign-permutation lattice
//! actions, where G is realized as the Galois group of an explicit
//! extension K over a base field.
//!
//! The crate builds the invariant generators y_i as coset sums of a
//! normal element, assembles their coordinate matrices over K, and
//! certifies the construction with exact arithmetic end to end:
//! invertibility of the coordinate matrix, invariance of every generator
//! under the full group, and an exact round-trip back to the original
//! variables.

pub mod construct;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod forms;
pub mod group;
pub mod splitting;

pub use construct::{
    build_permutation, build_signed, certify, check_signdet_hypotheses, moore_matrix,
    product_in_y, CertificateKind, Construction, MooreInstance, RationalityCertificate,
    SigndetReport,
};
pub use error::{Error, Result};
pub use exact::{Base, Scalar, UniPoly};
pub use forms::{act_affine, act_linear, AffineForm, KMatrix, LinearForm, MultiPoly};
pub use group::{
    bind_iso, close_group, close_group_from_matrices, presentation_from_images, Classification,
    CosetTable, GroupFieldIso, MatrixGroup, Orbits, Perm, SignedPermElement,
};
pub use splitting::{
    find_normal, frobenius, frobenius_presentation, is_normal, Automorphism, FieldDescriptor,
    FieldElement, GaloisPresentation, IrreducibilityStatus, PresentationReport,
};
