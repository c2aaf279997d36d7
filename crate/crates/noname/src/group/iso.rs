//! Binding a matrix group to a Galois presentation: the isomorphism that
//! lets group elements act on field coefficients.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::MatrixGroup;
use crate::splitting::field::{FieldDescriptor, FieldElement};
use crate::splitting::galois::{Automorphism, GaloisPresentation};

/// A verified isomorphism from a matrix group onto a Galois presentation.
///
/// `assignment[e]` is the presentation index of the automorphism attached
/// to roster element `e`. Verification is exhaustive: the map is bijective
/// and multiplicative on every pair.
#[derive(Clone, Debug)]
pub struct GroupFieldIso {
    group: Arc<MatrixGroup>,
    presentation: Arc<GaloisPresentation>,
    assignment: Vec<usize>,
}

impl GroupFieldIso {
    pub fn group(&self) -> &Arc<MatrixGroup> {
        &self.group
    }

    pub fn presentation(&self) -> &Arc<GaloisPresentation> {
        &self.presentation
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        self.presentation.descriptor()
    }

    /// The automorphism assigned to roster element `e`.
    pub fn automorphism_of(&self, e: usize) -> &Automorphism {
        self.presentation.automorphism(self.assignment[e])
    }

    /// Applies the automorphism of roster element `e` to a field element.
    pub fn apply(&self, e: usize, a: &FieldElement) -> FieldElement {
        self.automorphism_of(e).apply(a)
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }
}

/// Extends generator images along the closure's BFS tree and verifies the
/// result is an isomorphism.
///
/// `generator_images[slot]` is the presentation index assigned to the
/// group generator in that input slot.
pub fn bind_iso(
    group: &Arc<MatrixGroup>,
    presentation: &Arc<GaloisPresentation>,
    generator_images: &[usize],
) -> Result<GroupFieldIso> {
    if generator_images.len() != group.generator_indices().len() {
        return Err(Error::IsoInvalid(format!(
            "{} generator images for {} generators",
            generator_images.len(),
            group.generator_indices().len()
        )));
    }
    if group.order() != presentation.order() {
        return Err(Error::IsoInvalid(format!(
            "group order {} != presentation order {}",
            group.order(),
            presentation.order()
        )));
    }
    let order = group.order();
    let mut assignment = vec![usize::MAX; order];
    assignment[0] = presentation.identity_index();
    // roster order extends parents before children
    for e in 1..order {
        let (parent, slot) = group
            .bfs_parent(e)
            .expect("non-identity element has a BFS parent");
        let image = presentation
            .compose_indices(assignment[parent], generator_images[slot])
            .ok_or_else(|| {
                Error::IsoInvalid("presentation is not closed under composition".into())
            })?;
        assignment[e] = image;
    }
    // bijectivity
    let mut seen = vec![false; order];
    for &a in &assignment {
        if seen[a] {
            return Err(Error::IsoInvalid(
                "assignment is not bijective: two group elements share an automorphism".into(),
            ));
        }
        seen[a] = true;
    }
    // homomorphism law on all pairs; catches inconsistent word extensions
    for i in 0..order {
        for j in 0..order {
            let lhs = assignment[group.mul_index(i, j)];
            let rhs = presentation
                .compose_indices(assignment[i], assignment[j])
                .ok_or_else(|| {
                    Error::IsoInvalid("presentation is not closed under composition".into())
                })?;
            if lhs != rhs {
                return Err(Error::IsoInvalid(format!(
                    "assignment breaks the homomorphism law at pair ({i}, {j}): \
                     two words for one element map to different automorphisms"
                )));
            }
        }
    }
    Ok(GroupFieldIso {
        group: group.clone(),
        presentation: presentation.clone(),
        assignment,
    })
}

/// Builds the presentation *and* the isomorphism from one generator-image
/// per group generator, the way problem configurations specify them.
///
/// The automorphism roster is generated by extending the images along the
/// group's BFS tree, so it is in roster order and has the identity first.
pub fn presentation_from_images(
    group: &Arc<MatrixGroup>,
    desc: &Arc<FieldDescriptor>,
    generator_images: &[FieldElement],
) -> Result<(Arc<GaloisPresentation>, GroupFieldIso)> {
    if generator_images.len() != group.generator_indices().len() {
        return Err(Error::IsoInvalid(format!(
            "{} generator images for {} generators",
            generator_images.len(),
            group.generator_indices().len()
        )));
    }
    let gen_autos: Result<Vec<Automorphism>> = generator_images
        .iter()
        .map(|img| Automorphism::new(desc, img.clone()))
        .collect();
    let gen_autos = gen_autos?;
    let mut autos = vec![Automorphism::identity(desc)];
    for e in 1..group.order() {
        let (parent, slot) = group.bfs_parent(e).expect("BFS parent");
        let auto = autos[parent].compose(&gen_autos[slot]);
        autos.push(auto);
    }
    let presentation = Arc::new(GaloisPresentation::new(desc, autos)?);
    let report = presentation.verify();
    if !report.ok {
        return Err(Error::PresentationInvalid(
            report.violation.unwrap_or_else(|| "unknown violation".into()),
        ));
    }
    let images: Vec<usize> = gen_autos
        .iter()
        .map(|a| {
            presentation
                .index_of(a)
                .expect("generator automorphism is in the roster")
        })
        .collect();
    let iso = bind_iso(group, &presentation, &images)?;
    Ok((presentation, iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Base;
    use crate::exact::UniPoly;
    use crate::group::{close_group_from_matrices, SignedPermElement};
    use crate::splitting::field::FieldDescriptor;

    fn c4_setup() -> (Arc<MatrixGroup>, Arc<FieldDescriptor>) {
        let group = Arc::new(
            close_group_from_matrices(
                3,
                &[vec![vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, -1]]],
                20000,
            )
            .unwrap(),
        );
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[1, 1, 1, 1, 1]),
            "r5",
            false,
        )
        .unwrap();
        (group, desc)
    }

    #[test]
    fn c4_binds_to_the_squaring_automorphism() {
        let (group, desc) = c4_setup();
        let rho = FieldElement::generator(&desc);
        let (presentation, iso) =
            presentation_from_images(&group, &desc, &[rho.pow(2)]).unwrap();
        assert_eq!(presentation.order(), 4);
        assert!(presentation.verify().ok);

        // sigma index 1 in roster order; sigma(rho) = rho^2
        let sigma = SignedPermElement::from_matrix(&[
            vec![0, -1, 0],
            vec![1, 0, 0],
            vec![0, 0, -1],
        ])
        .unwrap();
        let e = group.index_of(&sigma).unwrap();
        assert_eq!(iso.apply(e, &rho), rho.pow(2));
        // identity maps to identity
        assert!(iso.automorphism_of(0).is_identity());
    }

    #[test]
    fn order_mismatch_is_an_iso_error() {
        let (group, desc) = c4_setup();
        let rho = FieldElement::generator(&desc);
        // rho -> rho^4 is conjugation-like of order 2; closure of the
        // image set cannot cover an order-4 group
        let err = presentation_from_images(&group, &desc, &[rho.pow(4)]);
        assert!(matches!(err, Err(Error::PresentationInvalid(_)) | Err(Error::IsoInvalid(_))), "{err:?}");
    }

    #[test]
    fn identity_image_for_nontrivial_generator_fails() {
        let (group, desc) = c4_setup();
        let rho = FieldElement::generator(&desc);
        let err = presentation_from_images(&group, &desc, std::slice::from_ref(&rho));
        assert!(err.is_err());
    }
}
