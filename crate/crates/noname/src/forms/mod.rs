//! Symbolic carriers for the invariant generators: K-linear forms in the
//! x variables, K-affine forms in the z variables, and the group action
//! on both.

pub mod kmatrix;
pub mod multipoly;
pub mod render;

pub use kmatrix::KMatrix;
pub use multipoly::MultiPoly;

use crate::error::{Error, Result};
use crate::group::iso::GroupFieldIso;
use crate::splitting::field::FieldElement;

/// A K-linear form `sum_j coeffs[j] * x_j` (no constant term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<FieldElement>) -> LinearForm {
        assert!(!coeffs.is_empty(), "empty form");
        LinearForm { coeffs }
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, j: usize) -> &FieldElement {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// The form `x_i`.
    pub fn unit(n: usize, i: usize, one: &FieldElement) -> LinearForm {
        let zero = one.sub(one);
        let mut coeffs = vec![zero; n];
        coeffs[i] = one.clone();
        LinearForm { coeffs }
    }
}

/// A K-affine form `constant + sum_j coeffs[j] * z_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    constant: FieldElement,
    coeffs: Vec<FieldElement>,
}

impl AffineForm {
    pub fn new(constant: FieldElement, coeffs: Vec<FieldElement>) -> AffineForm {
        assert!(!coeffs.is_empty(), "empty form");
        AffineForm { constant, coeffs }
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn constant(&self) -> &FieldElement {
        &self.constant
    }

    pub fn coeff(&self, j: usize) -> &FieldElement {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }
}

/// Applies group element `e` to a linear form: the coefficient of `x_j`
/// moves to slot `rho_g(j)` with its coefficient conjugated through the
/// isomorphism. Only defined for pure permutation elements; a signed
/// element needs the affine carrier.
pub fn act_linear(e: usize, iso: &GroupFieldIso, f: &LinearForm) -> Result<LinearForm> {
    let g = iso.group().element(e);
    let n = f.arity();
    assert_eq!(n, g.dimension(), "form arity does not match group dimension");
    if !g.all_signs_positive() {
        return Err(Error::Usage(
            "signed element acting on a linear form; use the affine action".into(),
        ));
    }
    let zero = f.coeff(0).sub(f.coeff(0));
    let mut out = vec![zero; n];
    for j in 0..n {
        out[g.rho().apply(j)] = iso.apply(e, f.coeff(j));
    }
    Ok(LinearForm { coeffs: out })
}

/// Applies group element `e` to an affine form: `z_j` goes to
/// `z_(rho_g(j))` on sign +1 and to `1 - z_(rho_g(j))` on sign -1, the
/// coefficients are conjugated, and the constant is recollected.
pub fn act_affine(e: usize, iso: &GroupFieldIso, f: &AffineForm) -> AffineForm {
    let g = iso.group().element(e);
    let n = f.arity();
    assert_eq!(n, g.dimension(), "form arity does not match group dimension");
    let mut constant = iso.apply(e, f.constant());
    let zero = constant.sub(&constant);
    let mut out = vec![zero; n];
    for j in 0..n {
        let c = iso.apply(e, f.coeff(j));
        let target = g.rho().apply(j);
        if g.sign(j) == 1 {
            out[target] = out[target].add(&c);
        } else {
            constant = constant.add(&c);
            out[target] = out[target].sub(&c);
        }
    }
    AffineForm { constant, coeffs: out }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render::form_string(None, &self.coeffs, "x"))
    }
}

impl std::fmt::Display for AffineForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render::form_string(Some(&self.constant), &self.coeffs, "z"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Base;
    use crate::exact::UniPoly;
    use crate::group::{close_group_from_matrices, MatrixGroup};
    use crate::splitting::field::{FieldDescriptor, FieldElement};
    use std::sync::Arc;

    fn c2_swap() -> (Arc<MatrixGroup>, GroupFieldIso, Arc<FieldDescriptor>) {
        let group = Arc::new(
            close_group_from_matrices(2, &[vec![vec![0, 1], vec![1, 0]]], 100).unwrap(),
        );
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
            "t",
            false,
        )
        .unwrap();
        let conj = FieldElement::generator(&desc).neg();
        let (_, iso) = crate::group::presentation_from_images(&group, &desc, &[conj]).unwrap();
        (group, iso, desc)
    }

    fn sign_flip() -> (Arc<MatrixGroup>, GroupFieldIso, Arc<FieldDescriptor>) {
        let group =
            Arc::new(close_group_from_matrices(1, &[vec![vec![-1]]], 100).unwrap());
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
            "t",
            false,
        )
        .unwrap();
        let conj = FieldElement::generator(&desc).neg();
        let (_, iso) = crate::group::presentation_from_images(&group, &desc, &[conj]).unwrap();
        (group, iso, desc)
    }

    #[test]
    fn identity_fixes_forms() {
        let (_, iso, desc) = c2_swap();
        let t = FieldElement::generator(&desc);
        let f = LinearForm::new(vec![t.clone(), t.add(&FieldElement::one(&desc))]);
        assert_eq!(act_linear(0, &iso, &f).unwrap(), f);
        let a = AffineForm::new(t.clone(), vec![t.clone(), FieldElement::one(&desc)]);
        assert_eq!(act_affine(0, &iso, &a), a);
    }

    #[test]
    fn invariant_linear_form_under_swap() {
        // f = (1 + sqrt2) x1 + (1 - sqrt2) x2 is fixed by conjugate-and-swap
        let (group, iso, desc) = c2_swap();
        let one = FieldElement::one(&desc);
        let t = FieldElement::generator(&desc);
        let f = LinearForm::new(vec![one.add(&t), one.sub(&t)]);
        let swapped = act_linear(1, &iso, &f).unwrap();
        assert_eq!(swapped, f);
        assert_eq!(group.order(), 2);
    }

    #[test]
    fn signed_element_rejected_by_linear_action() {
        let (_, iso, desc) = sign_flip();
        let f = LinearForm::new(vec![FieldElement::generator(&desc)]);
        assert!(act_linear(1, &iso, &f).is_err());
    }

    #[test]
    fn sign_flip_fixes_its_affine_form() {
        // y = (1 - sqrt2) + 2 sqrt2 z1 is fixed by conjugate-and-flip
        let (_, iso, desc) = sign_flip();
        let one = FieldElement::one(&desc);
        let t = FieldElement::generator(&desc);
        let f = AffineForm::new(one.sub(&t), vec![t.add(&t)]);
        let acted = act_affine(1, &iso, &f);
        assert_eq!(acted, f);
    }

    #[test]
    fn actions_compose() {
        let (group, iso, desc) = c2_swap();
        let t = FieldElement::generator(&desc);
        let f = LinearForm::new(vec![t.clone(), FieldElement::one(&desc)]);
        for i in 0..group.order() {
            for j in 0..group.order() {
                let composed = act_linear(group.mul_index(i, j), &iso, &f).unwrap();
                let stepwise =
                    act_linear(i, &iso, &act_linear(j, &iso, &f).unwrap()).unwrap();
                assert_eq!(composed, stepwise);
            }
        }
    }
}
