//! Exact arithmetic substrate: arbitrary-precision rationals, prime
//! fields, univariate polynomials over either, and base-field linear
//! algebra.

pub mod fp;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod scalar;

pub use fp::{is_prime, Fp};
pub use poly::UniPoly;
pub use rat::{format_rat, parse_rat, rat, rat_int, Rat};
pub use scalar::{Base, Scalar};
