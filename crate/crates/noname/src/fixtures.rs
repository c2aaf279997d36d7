//! Worked-example fixtures shared by tests, the acceptance suite and the
//! bundled CLI configurations.
//!
//! The degree-8 dihedral fixture uses a single-generator presentation of
//! the splitting field of x^4 - 2: the primitive element is theta + i
//! (theta the real fourth root of 2), and the committed coefficient
//! vectors were produced once by `scripts/derive_d8_fixture.py`.

use std::sync::Arc;

use crate::error::Result;
use crate::exact::rat::parse_rat;
use crate::exact::scalar::{Base, Scalar};
use crate::exact::UniPoly;
use crate::group::iso::GroupFieldIso;
use crate::group::{close_group_from_matrices, presentation_from_images, MatrixGroup};
use crate::splitting::field::{FieldDescriptor, FieldElement};
use crate::splitting::galois::GaloisPresentation;

/// A bound problem instance: field, group, isomorphism and a known
/// normal element.
pub struct Fixture {
    pub desc: Arc<FieldDescriptor>,
    pub group: Arc<MatrixGroup>,
    pub presentation: Arc<GaloisPresentation>,
    pub iso: GroupFieldIso,
    pub alpha: FieldElement,
}

fn build(
    desc: Arc<FieldDescriptor>,
    n: usize,
    matrices: &[Vec<Vec<i64>>],
    images: Vec<FieldElement>,
    alpha: FieldElement,
) -> Result<Fixture> {
    let group = Arc::new(close_group_from_matrices(n, matrices, 20000)?);
    let (presentation, iso) = presentation_from_images(&group, &desc, &images)?;
    Ok(Fixture { desc, group, presentation, iso, alpha })
}

/// Q(sqrt 2) with the two-variable swap; alpha = 1 + sqrt 2.
pub fn c2_swap() -> Fixture {
    let desc = FieldDescriptor::new(
        Base::Rational,
        UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
        "t",
        false,
    )
    .expect("fixture field");
    let conj = FieldElement::generator(&desc).neg();
    let alpha = FieldElement::from_i64_coords(&desc, &[1, 1]).unwrap();
    build(
        desc,
        2,
        &[vec![vec![0, 1], vec![1, 0]]],
        vec![conj],
        alpha,
    )
    .expect("fixture")
}

/// Q(sqrt 2) with the one-variable sign flip; alpha = 1 + sqrt 2.
pub fn sign_flip() -> Fixture {
    let desc = FieldDescriptor::new(
        Base::Rational,
        UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
        "t",
        false,
    )
    .expect("fixture field");
    let conj = FieldElement::generator(&desc).neg();
    let alpha = FieldElement::from_i64_coords(&desc, &[1, 1]).unwrap();
    build(desc, 1, &[vec![vec![-1]]], vec![conj], alpha).expect("fixture")
}

/// The signed order-4 example: Q(rho) for a primitive fifth root of
/// unity, the generator sending rho to rho^2, and the signed matrix of
/// order 4 on three indices. alpha = rho.
pub fn c4_signed() -> Fixture {
    let desc = FieldDescriptor::new(
        Base::Rational,
        UniPoly::from_i64(Base::Rational, &[1, 1, 1, 1, 1]),
        "r5",
        false,
    )
    .expect("fixture field");
    let rho = FieldElement::generator(&desc);
    let alpha = rho.clone();
    build(
        desc,
        3,
        &[vec![vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, -1]]],
        vec![rho.pow(2)],
        alpha,
    )
    .expect("fixture")
}

/// Modulus of the flattened dihedral field: the minimal polynomial of
/// theta + i, ascending coefficients.
pub const D8_MODULUS: [i64; 9] = [1, 0, 28, 0, 2, 0, 4, 0, 1];

/// r(gamma), s(gamma) and alpha over the power basis of gamma = theta + i,
/// from the committed oracle run.
pub const D8_R_IMAGE: [&str; 8] =
    ["29/24", "-127/24", "13/24", "-5/24", "5/24", "-19/24", "1/24", "-5/24"];
pub const D8_S_IMAGE: [&str; 8] = ["0", "139/12", "0", "5/12", "0", "19/12", "0", "5/12"];
pub const D8_ALPHA: [&str; 8] =
    ["-7/8", "-5/12", "7/8", "-1/12", "-3/8", "-5/12", "-1/8", "-1/12"];
/// theta and i themselves, for tests that want to cross-check the
/// flattening.
pub const D8_THETA: [&str; 8] = ["0", "151/24", "0", "5/24", "0", "19/24", "0", "5/24"];
pub const D8_I: [&str; 8] = ["0", "-127/24", "0", "-5/24", "0", "-19/24", "0", "-5/24"];

pub fn d8_rational_vector(desc: &Arc<FieldDescriptor>, strs: &[&str]) -> FieldElement {
    let coords: Vec<Scalar> = strs
        .iter()
        .map(|s| Scalar::Rat(parse_rat(s).expect("fixture literal")))
        .collect();
    FieldElement::from_coords(desc, coords).expect("fixture vector")
}

/// The r, s generator matrices of the dihedral example: r cycles the four
/// indices, s fixes 1 and 3 and swaps 2 and 4.
pub fn d8_matrices() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ],
        vec![
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 0],
        ],
    ]
}

/// The dihedral fixture of order 8 on the flattened degree-8 field;
/// alpha = (1 + theta + theta^2 + theta^3)(1 + i). The modulus is
/// degree 8, where the bounded factor search is inconclusive, so the
/// fixture asserts irreducibility (the oracle derived the polynomial as a
/// minimal polynomial, which is irreducible by construction).
pub fn d8() -> Fixture {
    let desc = FieldDescriptor::new(
        Base::Rational,
        UniPoly::from_i64(Base::Rational, &D8_MODULUS),
        "g",
        true,
    )
    .expect("fixture field");
    let r_image = d8_rational_vector(&desc, &D8_R_IMAGE);
    let s_image = d8_rational_vector(&desc, &D8_S_IMAGE);
    let alpha = d8_rational_vector(&desc, &D8_ALPHA);
    build(desc, 4, &d8_matrices(), vec![r_image, s_image], alpha).expect("fixture")
}

/// F_4 = F_2[t]/(t^2+t+1).
pub fn f4_field() -> Arc<FieldDescriptor> {
    let p2 = Base::Prime(2);
    FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 1]), "t", false).expect("fixture field")
}

/// F_8 = F_2[t]/(t^3+t+1).
pub fn f8_field() -> Arc<FieldDescriptor> {
    let p2 = Base::Prime(2);
    FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 0, 1]), "t", false)
        .expect("fixture field")
}

/// F_9 = F_3[t]/(t^2+1).
pub fn f9_field() -> Arc<FieldDescriptor> {
    let p3 = Base::Prime(3);
    FieldDescriptor::new(p3, UniPoly::from_i64(p3, &[1, 0, 1]), "t", false).expect("fixture field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::splitting::normal::is_normal;

    #[test]
    fn fixtures_bind_and_alphas_are_normal() {
        for fixture in [c2_swap(), sign_flip(), c4_signed()] {
            assert!(fixture.presentation.verify().ok);
            assert!(is_normal(&fixture.alpha, &fixture.presentation));
        }
    }

    #[test]
    fn d8_fixture_flattening_is_consistent() {
        let fixture = d8();
        assert_eq!(fixture.group.order(), 8);
        assert!(fixture.presentation.verify().ok);
        assert!(is_normal(&fixture.alpha, &fixture.presentation));

        let desc = &fixture.desc;
        let theta = d8_rational_vector(desc, &D8_THETA);
        let i = d8_rational_vector(desc, &D8_I);
        // theta^4 = 2 and i^2 = -1 in the flattened field
        assert_eq!(theta.pow(4), FieldElement::from_int(desc, 2));
        assert_eq!(i.pow(2), FieldElement::from_int(desc, -1));
        // gamma = theta + i
        assert_eq!(theta.add(&i), FieldElement::generator(desc));
        // alpha = (1 + theta + theta^2 + theta^3)(1 + i)
        let one = FieldElement::one(desc);
        let theta_sum = one.add(&theta).add(&theta.pow(2)).add(&theta.pow(3));
        assert_eq!(fixture.alpha, theta_sum.mul(&one.add(&i)));

        // the generator action matches r(theta) = i*theta, r(i) = i,
        // s(theta) = theta, s(i) = -i
        let r = fixture.iso.automorphism_of(fixture.group.generator_indices()[0]).clone();
        let s = fixture.iso.automorphism_of(fixture.group.generator_indices()[1]).clone();
        assert_eq!(r.apply(&theta), i.mul(&theta));
        assert_eq!(r.apply(&i), i);
        assert_eq!(s.apply(&theta), theta);
        assert_eq!(s.apply(&i), i.neg());
    }
}
