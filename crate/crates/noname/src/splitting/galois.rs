//! Automorphisms of K fixing the base field, and explicit presentations
//! of the Galois group.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::scalar::{Base, Scalar};
use crate::splitting::field::{FieldDescriptor, FieldElement};

/// A field automorphism of K fixing the base, determined by the image of
/// the generator t. Construction checks that the image is a root of the
/// modulus, which makes the induced map a well-defined ring homomorphism,
/// and precomputes the coordinates of image^j so that applying the map is
/// a base-field matrix-vector product.
#[derive(Clone, Debug)]
pub struct Automorphism {
    desc: Arc<FieldDescriptor>,
    image: FieldElement,
    /// `image_powers[j]` = coordinates of image^j, j = 0..d-1.
    image_powers: Vec<Vec<Scalar>>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        FieldDescriptor::same(&self.desc, &other.desc) && self.image == other.image
    }
}
impl Eq for Automorphism {}

impl Automorphism {
    pub fn new(desc: &Arc<FieldDescriptor>, image: FieldElement) -> Result<Automorphism> {
        if !FieldDescriptor::same(desc, image.descriptor()) {
            return Err(Error::Usage("automorphism image from a different field".into()));
        }
        // m(image) must vanish in K
        let mut acc = FieldElement::zero(desc);
        for c in desc.modulus().coeffs().iter().rev() {
            acc = acc.mul(&image).add(&FieldElement::from_scalar(desc, c.clone()));
        }
        if !acc.is_zero() {
            return Err(Error::Usage(
                "generator image is not a root of the modulus".into(),
            ));
        }
        Ok(Automorphism::from_root(desc, image))
    }

    /// Builds the power table for a validated root.
    fn from_root(desc: &Arc<FieldDescriptor>, image: FieldElement) -> Automorphism {
        let d = desc.degree();
        let mut image_powers = Vec::with_capacity(d);
        let mut power = FieldElement::one(desc);
        for j in 0..d {
            if j > 0 {
                power = power.mul(&image);
            }
            image_powers.push(power.coords().to_vec());
        }
        Automorphism { desc: desc.clone(), image, image_powers }
    }

    pub fn identity(desc: &Arc<FieldDescriptor>) -> Automorphism {
        Automorphism::from_root(desc, FieldElement::generator(desc))
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    pub fn image_of_generator(&self) -> &FieldElement {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image == FieldElement::generator(&self.desc)
    }

    /// Applies the automorphism: the coordinate vector of `a` against the
    /// precomputed powers of the generator image. Base-field constants
    /// are fixed.
    pub fn apply(&self, a: &FieldElement) -> FieldElement {
        assert!(
            FieldDescriptor::same(&self.desc, a.descriptor()),
            "field descriptor mismatch"
        );
        let d = self.desc.degree();
        let mut out = vec![Scalar::zero(self.desc.base()); d];
        for (j, aj) in a.coords().iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (r, out_r) in out.iter_mut().enumerate() {
                let term = aj.mul(&self.image_powers[j][r]);
                *out_r = out_r.add(&term);
            }
        }
        FieldElement::from_coords(&self.desc, out).expect("d coordinates")
    }

    /// Composition: `(self ∘ other)(t) = self(other(t))`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        assert!(
            FieldDescriptor::same(&self.desc, &other.desc),
            "field descriptor mismatch"
        );
        Automorphism::from_root(&self.desc, self.apply(&other.image))
    }
}

/// Outcome of checking a claimed Galois presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub ok: bool,
    /// First violated condition, when not ok.
    pub violation: Option<String>,
}

impl PresentationReport {
    fn pass() -> Self {
        PresentationReport { ok: true, violation: None }
    }
    fn fail(msg: impl Into<String>) -> Self {
        PresentationReport { ok: false, violation: Some(msg.into()) }
    }
}

/// An explicit roster of the Galois group of K over the base field.
#[derive(Clone, Debug)]
pub struct GaloisPresentation {
    desc: Arc<FieldDescriptor>,
    automorphisms: Vec<Automorphism>,
    identity: usize,
    /// generator image coords -> roster index, for composition lookups
    index: BTreeMap<Vec<Scalar>, usize>,
}

impl GaloisPresentation {
    pub fn new(
        desc: &Arc<FieldDescriptor>,
        automorphisms: Vec<Automorphism>,
    ) -> Result<GaloisPresentation> {
        if automorphisms.is_empty() {
            return Err(Error::PresentationInvalid("empty automorphism set".into()));
        }
        let mut index = BTreeMap::new();
        for (i, a) in automorphisms.iter().enumerate() {
            if !FieldDescriptor::same(desc, a.descriptor()) {
                return Err(Error::PresentationInvalid(
                    "automorphism from a different field".into(),
                ));
            }
            if index.insert(a.image_of_generator().coords().to_vec(), i).is_some() {
                return Err(Error::PresentationInvalid(format!(
                    "duplicate automorphism t -> {}",
                    a.image_of_generator()
                )));
            }
        }
        let identity = automorphisms
            .iter()
            .position(Automorphism::is_identity)
            .ok_or_else(|| Error::PresentationInvalid("identity automorphism missing".into()))?;
        Ok(GaloisPresentation { desc: desc.clone(), automorphisms, identity, index })
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    pub fn order(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn automorphism(&self, i: usize) -> &Automorphism {
        &self.automorphisms[i]
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.automorphisms
    }

    /// Roster index of an automorphism, by its generator image.
    pub fn index_of(&self, a: &Automorphism) -> Option<usize> {
        self.index.get(a.image_of_generator().coords()).copied()
    }

    /// Index of the composition `automorphism(i) ∘ automorphism(j)`, if the
    /// set is closed at that pair.
    pub fn compose_indices(&self, i: usize, j: usize) -> Option<usize> {
        let c = self.automorphisms[i].compose(&self.automorphisms[j]);
        self.index_of(&c)
    }

    /// Checks the group axioms and that the simultaneous fixed subspace is
    /// exactly the base field; reports the first violated condition.
    pub fn verify(&self) -> PresentationReport {
        let d = self.desc.degree();
        // distinctness is enforced at construction; count must match degree
        if self.automorphisms.len() != d {
            return PresentationReport::fail(format!(
                "presentation has {} automorphisms but the field has degree {d}",
                self.automorphisms.len()
            ));
        }
        for (i, a) in self.automorphisms.iter().enumerate() {
            for (j, b) in self.automorphisms.iter().enumerate() {
                if self.index_of(&a.compose(b)).is_none() {
                    return PresentationReport::fail(format!(
                        "not closed: automorphism {i} composed with {j} is outside the set"
                    ));
                }
            }
        }
        for (i, a) in self.automorphisms.iter().enumerate() {
            let has_inverse = self
                .automorphisms
                .iter()
                .any(|b| a.compose(b).is_identity());
            if !has_inverse {
                return PresentationReport::fail(format!("automorphism {i} has no inverse"));
            }
        }
        // fixed subspace: stack (M_sigma - I) and demand a 1-dim nullspace
        let base = self.desc.base();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for a in &self.automorphisms {
            if a.is_identity() {
                continue;
            }
            // column j of M_sigma is coords(sigma(t^j)) = coords(image^j),
            // already sitting in the automorphism's power table
            for r in 0..d {
                let mut row: Vec<Scalar> =
                    (0..d).map(|c| a.image_powers[c][r].clone()).collect();
                row[r] = row[r].sub(&Scalar::one(base));
                rows.push(row);
            }
        }
        let fixed_dim = linalg::nullspace_dim(&rows, d);
        if fixed_dim != 1 {
            return PresentationReport::fail(format!(
                "fixed subspace has dimension {fixed_dim}, expected 1 (the base field)"
            ));
        }
        PresentationReport::pass()
    }
}

/// The Frobenius automorphism a -> a^(p^e) of a prime-base field.
pub fn frobenius(desc: &Arc<FieldDescriptor>, e: u32) -> Result<Automorphism> {
    let Base::Prime(p) = desc.base() else {
        return Err(Error::Usage("Frobenius requires a prime base field".into()));
    };
    let mut image = FieldElement::generator(desc);
    for _ in 0..e {
        image = image.pow(p);
    }
    Automorphism::new(desc, image)
}

/// The full cyclic presentation generated by Frobenius on F_(p^d).
pub fn frobenius_presentation(desc: &Arc<FieldDescriptor>) -> Result<GaloisPresentation> {
    let d = desc.degree();
    let autos: Result<Vec<Automorphism>> = (0..d as u32).map(|e| frobenius(desc, e)).collect();
    GaloisPresentation::new(desc, autos?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::UniPoly;

    fn c4_field() -> Arc<FieldDescriptor> {
        FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[1, 1, 1, 1, 1]),
            "r5",
            false,
        )
        .unwrap()
    }

    fn sqrt2_field() -> Arc<FieldDescriptor> {
        FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
            "t",
            false,
        )
        .unwrap()
    }

    #[test]
    fn squaring_automorphism_of_fifth_roots() {
        let desc = c4_field();
        let rho = FieldElement::generator(&desc);
        let sigma = Automorphism::new(&desc, rho.pow(2)).unwrap();
        assert_eq!(sigma.apply(&rho), rho.pow(2));
        // sigma^3(rho) = rho^8 = rho^3
        let sigma3 = sigma.compose(&sigma).compose(&sigma);
        assert_eq!(sigma3.apply(&rho), rho.pow(3));
        // constants are fixed
        let seven = FieldElement::from_int(&desc, 7);
        assert_eq!(sigma.apply(&seven), seven);
        // sigma . sigma maps rho to rho^4
        assert_eq!(sigma.compose(&sigma).apply(&rho), rho.pow(4));
        // sigma . identity = sigma, sigma . sigma^-1 = identity
        let id = Automorphism::identity(&desc);
        assert_eq!(sigma.compose(&id), sigma);
        let sigma_inv = sigma3.clone();
        assert!(sigma.compose(&sigma_inv).compose(&sigma_inv.compose(&sigma)).is_identity());
        assert!(sigma.compose(&sigma3).is_identity());
    }

    #[test]
    fn bad_generator_image_rejected() {
        let desc = sqrt2_field();
        let err = Automorphism::new(&desc, FieldElement::one(&desc));
        assert!(err.is_err());
    }

    #[test]
    fn verify_c4_presentation() {
        let desc = c4_field();
        let rho = FieldElement::generator(&desc);
        let autos = vec![
            Automorphism::identity(&desc),
            Automorphism::new(&desc, rho.pow(2)).unwrap(),
            Automorphism::new(&desc, rho.pow(4)).unwrap(),
            Automorphism::new(&desc, rho.pow(3)).unwrap(),
        ];
        let pres = GaloisPresentation::new(&desc, autos).unwrap();
        let report = pres.verify();
        assert!(report.ok, "{report:?}");
    }

    #[test]
    fn undersized_presentation_fails() {
        let desc = sqrt2_field();
        let pres = GaloisPresentation::new(&desc, vec![Automorphism::identity(&desc)]).unwrap();
        let report = pres.verify();
        assert!(!report.ok);
        assert!(report.violation.unwrap().contains("degree 2"));
    }

    #[test]
    fn conjugation_presentation_passes() {
        let desc = sqrt2_field();
        let t = FieldElement::generator(&desc);
        let conj = Automorphism::new(&desc, t.neg()).unwrap();
        let pres = GaloisPresentation::new(&desc, vec![Automorphism::identity(&desc), conj]).unwrap();
        assert!(pres.verify().ok);
    }

    #[test]
    fn frobenius_on_f4_and_f9() {
        let p2 = Base::Prime(2);
        let f4 = FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 1]), "t", false).unwrap();
        let frob = frobenius(&f4, 1).unwrap();
        let t = FieldElement::generator(&f4);
        // t -> t^2 = t + 1
        assert_eq!(frob.apply(&t), FieldElement::from_i64_coords(&f4, &[1, 1]).unwrap());
        // e = d gives the identity
        assert!(frobenius(&f4, 2).unwrap().is_identity());

        let p3 = Base::Prime(3);
        let f9 = FieldDescriptor::new(p3, UniPoly::from_i64(p3, &[1, 0, 1]), "t", false).unwrap();
        let frob = frobenius(&f9, 1).unwrap();
        let t = FieldElement::generator(&f9);
        assert_eq!(frob.apply(&t), t.neg());

        assert!(frobenius(&sqrt2_field(), 1).is_err());

        // presentation on F_8 is cyclic of order 3 and verifies
        let f8 = FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 0, 1]), "t", false).unwrap();
        let pres = frobenius_presentation(&f8).unwrap();
        assert_eq!(pres.order(), 3);
        assert!(pres.verify().ok);
    }

    #[test]
    fn frobenius_has_exact_order_d() {
        let p2 = Base::Prime(2);
        let f8 = FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 0, 1]), "t", false).unwrap();
        let frob = frobenius(&f8, 1).unwrap();
        let mut acc = frob.clone();
        let mut order = 1;
        while !acc.is_identity() {
            acc = acc.compose(&frob);
            order += 1;
        }
        assert_eq!(order, 3);
    }
}
