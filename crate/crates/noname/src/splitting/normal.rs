//! Normal elements: testing and randomized search.
//!
//! An element is normal when its Galois conjugates form a base-field basis
//! of K, equivalently when the matrix of conjugate coordinates is
//! invertible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::scalar::Scalar;
use crate::splitting::field::FieldElement;
use crate::splitting::galois::GaloisPresentation;

/// The d x d matrix whose rows are the base coordinates of the conjugates
/// of `alpha`, in presentation order.
pub fn conjugate_matrix(alpha: &FieldElement, presentation: &GaloisPresentation) -> Vec<Vec<Scalar>> {
    presentation
        .automorphisms()
        .iter()
        .map(|sigma| sigma.apply(alpha).coords().to_vec())
        .collect()
}

/// True iff the conjugates of `alpha` are linearly independent over the
/// base field (exact determinant test).
pub fn is_normal(alpha: &FieldElement, presentation: &GaloisPresentation) -> bool {
    let rows = conjugate_matrix(alpha, presentation);
    let base = presentation.descriptor().base();
    !linalg::det(&rows, base).expect("square conjugate matrix").is_zero()
}

/// Randomized search for a normal element. Candidates draw integer
/// coordinates from the box {-h..h}; h starts at 1 and doubles every d^2
/// failures. Deterministic for a fixed seed.
pub fn find_normal(
    presentation: &GaloisPresentation,
    seed: u64,
    max_tries: u64,
) -> Result<FieldElement> {
    let desc = presentation.descriptor();
    let d = desc.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut height: i64 = 1;
    let mut failures: u64 = 0;
    for _ in 0..max_tries {
        let ints: Vec<i64> = (0..d).map(|_| rng.gen_range(-height..=height)).collect();
        let candidate = FieldElement::from_i64_coords(desc, &ints).expect("d coordinates");
        if !candidate.is_zero() && is_normal(&candidate, presentation) {
            return Ok(candidate);
        }
        failures += 1;
        if failures % (d as u64 * d as u64) == 0 {
            height = height.saturating_mul(2);
        }
    }
    Err(Error::SearchFailed { tries: max_tries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Base;
    use crate::exact::UniPoly;
    use crate::splitting::field::FieldDescriptor;
    use crate::splitting::galois::{frobenius_presentation, Automorphism};
    use std::sync::Arc;

    fn sqrt2_presentation() -> (Arc<FieldDescriptor>, GaloisPresentation) {
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[-2, 0, 1]),
            "t",
            false,
        )
        .unwrap();
        let t = FieldElement::generator(&desc);
        let conj = Automorphism::new(&desc, t.neg()).unwrap();
        let pres =
            GaloisPresentation::new(&desc, vec![Automorphism::identity(&desc), conj]).unwrap();
        (desc, pres)
    }

    #[test]
    fn primitive_fifth_root_is_normal_and_one_is_not() {
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[1, 1, 1, 1, 1]),
            "r5",
            false,
        )
        .unwrap();
        let rho = FieldElement::generator(&desc);
        let autos = vec![
            Automorphism::identity(&desc),
            Automorphism::new(&desc, rho.pow(2)).unwrap(),
            Automorphism::new(&desc, rho.pow(4)).unwrap(),
            Automorphism::new(&desc, rho.pow(3)).unwrap(),
        ];
        let pres = GaloisPresentation::new(&desc, autos).unwrap();
        assert!(is_normal(&rho, &pres));
        assert!(!is_normal(&FieldElement::one(&desc), &pres));
    }

    #[test]
    fn quadratic_normality_condition() {
        // in Q(sqrt 2), a + b*t is normal iff det [[a, b], [a, -b]] = -2ab != 0
        let (desc, pres) = sqrt2_presentation();
        for (a, b, expect) in [(1, 1, true), (3, -5, true), (1, 0, false), (0, 1, false)] {
            let alpha = FieldElement::from_i64_coords(&desc, &[a, b]).unwrap();
            assert_eq!(is_normal(&alpha, &pres), expect, "a={a} b={b}");
        }
    }

    #[test]
    fn search_is_deterministic_and_finds_normal_elements() {
        let (_, pres) = sqrt2_presentation();
        let x = find_normal(&pres, 42, 10_000).unwrap();
        let y = find_normal(&pres, 42, 10_000).unwrap();
        assert_eq!(x, y);
        assert!(is_normal(&x, &pres));
        // both coordinates must be nonzero in this field
        assert!(x.coords().iter().all(|c| !c.is_zero()));

        let z = find_normal(&pres, 43, 10_000).unwrap();
        assert!(is_normal(&z, &pres));
    }

    #[test]
    fn trivial_extension_any_nonzero_constant() {
        let desc = FieldDescriptor::new(
            Base::Rational,
            UniPoly::from_i64(Base::Rational, &[0, 1]), // t
            "t",
            false,
        )
        .unwrap();
        let pres = GaloisPresentation::new(&desc, vec![Automorphism::identity(&desc)]).unwrap();
        let alpha = find_normal(&pres, 7, 100).unwrap();
        assert!(!alpha.is_zero());
        assert!(is_normal(&alpha, &pres));
    }

    #[test]
    fn frobenius_generator_is_normal_in_f4() {
        let p2 = Base::Prime(2);
        let f4 = FieldDescriptor::new(p2, UniPoly::from_i64(p2, &[1, 1, 1]), "t", false).unwrap();
        let pres = frobenius_presentation(&f4).unwrap();
        let t = FieldElement::generator(&f4);
        assert!(is_normal(&t, &pres));
        // 1 is fixed by Frobenius, hence not normal
        assert!(!is_normal(&FieldElement::one(&f4), &pres));
        let found = find_normal(&pres, 5, 1000).unwrap();
        assert!(is_normal(&found, &pres));
    }

    #[test]
    fn search_failure_reports_tries() {
        // no normal element will show up in 0 tries
        let (_, pres) = sqrt2_presentation();
        match find_normal(&pres, 1, 0) {
            Err(Error::SearchFailed { tries }) => assert_eq!(tries, 0),
            other => panic!("expected search failure, got {other:?}"),
        }
    }
}
