//! Randomized property tests for the exact arithmetic substrate and the
//! linear-algebra layer.

use proptest::prelude::*;

use noname::exact::rat::{rat, Rat};
use noname::exact::{Base, Scalar, UniPoly};
use noname::fixtures::c4_signed;
use noname::{FieldElement, KMatrix};

const BASES: [Base; 4] = [Base::Rational, Base::Prime(2), Base::Prime(3), Base::Prime(5)];

fn scalar_vec(base: Base, ints: &[i64]) -> Vec<Scalar> {
    ints.iter().map(|&n| Scalar::from_i64(n, base)).collect()
}

fn poly(base: Base, ints: &[i64]) -> UniPoly {
    UniPoly::from_coeffs(base, scalar_vec(base, ints)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn rational_construction_is_canonical_and_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = rat(n, d);
        // canonical: reduced, positive denominator
        let again = Rat::new(r.numer().clone(), r.denom().clone());
        prop_assert_eq!(&again, &r);
        prop_assert!(r.denom().sign() != num_bigint::Sign::Minus);
    }

    #[test]
    fn rational_ring_axioms(
        (an, ad) in (-500i64..500, 1i64..100),
        (bn, bd) in (-500i64..500, 1i64..100),
        (cn, cd) in (-500i64..500, 1i64..100),
    ) {
        let a = rat(an, ad);
        let b = rat(bn, bd);
        let c = rat(cn, cd);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + (-&a), rat(0, 1));
    }

    #[test]
    fn divmod_round_trips_over_every_base(
        a in prop::collection::vec(-9i64..=9, 0..9),
        b in prop::collection::vec(-9i64..=9, 1..6),
    ) {
        for base in BASES {
            let pa = poly(base, &a);
            let pb = poly(base, &b);
            if pb.is_zero() {
                prop_assert!(pa.divmod(&pb).is_err());
                continue;
            }
            let (q, r) = pa.divmod(&pb).unwrap();
            let rebuilt = pb.mul(&q).unwrap().add(&r).unwrap();
            prop_assert_eq!(rebuilt, pa);
            if let (Some(dr), Some(db)) = (r.degree(), pb.degree()) {
                prop_assert!(dr < db);
            }
        }
    }

    #[test]
    fn xgcd_bezout_identity_over_every_base(
        a in prop::collection::vec(-9i64..=9, 0..8),
        b in prop::collection::vec(-9i64..=9, 0..8),
    ) {
        for base in BASES {
            let pa = poly(base, &a);
            let pb = poly(base, &b);
            if pa.is_zero() && pb.is_zero() {
                prop_assert!(pa.xgcd(&pb).is_err());
                continue;
            }
            let (g, u, v) = pa.xgcd(&pb).unwrap();
            let lhs = u.mul(&pa).unwrap().add(&v.mul(&pb).unwrap()).unwrap();
            prop_assert_eq!(&lhs, &g);
            prop_assert!(g.is_monic());
            // g divides both inputs
            if !pa.is_zero() {
                let (_, r) = pa.divmod(&g).unwrap();
                prop_assert!(r.is_zero());
            }
            if !pb.is_zero() {
                let (_, r) = pb.divmod(&g).unwrap();
                prop_assert!(r.is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn automorphisms_are_field_homomorphisms(
        a in prop::collection::vec(-9i64..=9, 4),
        b in prop::collection::vec(-9i64..=9, 4),
    ) {
        let fx = c4_signed();
        let x = FieldElement::from_i64_coords(&fx.desc, &a).unwrap();
        let y = FieldElement::from_i64_coords(&fx.desc, &b).unwrap();
        for sigma in fx.presentation.automorphisms() {
            prop_assert_eq!(sigma.apply(&x.add(&y)), sigma.apply(&x).add(&sigma.apply(&y)));
            prop_assert_eq!(sigma.apply(&x.mul(&y)), sigma.apply(&x).mul(&sigma.apply(&y)));
        }
    }

    #[test]
    fn determinant_is_multiplicative(
        a in prop::collection::vec(-3i64..=3, 18),
        b in prop::collection::vec(-3i64..=3, 18),
    ) {
        // 3x3 matrices over Q(rho), entries with two random coordinates
        let fx = c4_signed();
        let desc = &fx.desc;
        let entry = |ints: &[i64], k: usize| {
            FieldElement::from_i64_coords(desc, &[ints[2 * k], ints[2 * k + 1], 0, 0]).unwrap()
        };
        let rows_a: Vec<Vec<FieldElement>> =
            (0..3).map(|i| (0..3).map(|j| entry(&a, 3 * i + j)).collect()).collect();
        let rows_b: Vec<Vec<FieldElement>> =
            (0..3).map(|i| (0..3).map(|j| entry(&b, 3 * i + j)).collect()).collect();
        let ma = KMatrix::from_rows(rows_a).unwrap();
        let mb = KMatrix::from_rows(rows_b).unwrap();
        let product = ma.mul(&mb).unwrap();
        prop_assert_eq!(
            product.det_exact().unwrap(),
            ma.det_exact().unwrap().mul(&mb.det_exact().unwrap())
        );
    }

    #[test]
    fn inverse_round_trips_when_it_exists(
        a in prop::collection::vec(-4i64..=4, 8),
    ) {
        let fx = c4_signed();
        let desc = &fx.desc;
        let entry = |k: usize| {
            FieldElement::from_i64_coords(desc, &[a[2 * k], a[2 * k + 1], 0, 0]).unwrap()
        };
        let m = KMatrix::from_rows(vec![
            vec![entry(0), entry(1)],
            vec![entry(2), entry(3)],
        ])
        .unwrap();
        match m.invert_exact() {
            Ok(inv) => {
                let id = KMatrix::identity(2, desc);
                prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.mul(&m).unwrap(), id);
            }
            Err(_) => prop_assert!(m.det_exact().unwrap().is_zero()),
        }
    }
}
