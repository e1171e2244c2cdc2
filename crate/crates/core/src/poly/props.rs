use proptest::prelude::*;

use super::*;

const N: usize = 2;

fn space() -> VarSpace {
    VarSpace::new(N)
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-5i64..=5, -3i64..=3, 1i64..=4).prop_map(|(re, im, d)| {
        &GaussianRational::from_ratio(re, d) + &(&GaussianRational::i() * &GaussianRational::from(im))
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..3, 2 * N), scalar());
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            space(),
            terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)),
        )
    })
}

fn int_poly() -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0u32..4, 2 * N), -9i64..=9);
    prop::collection::vec(term, 0..8).prop_map(|terms| {
        Polynomial::from_terms(
            space(),
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), GaussianRational::from(c))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn point() -> impl Strategy<Value = Point> {
    (prop::collection::vec(scalar(), N), prop::collection::vec(scalar(), N)).prop_map(|(z, t)| Point::new(z, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::one(space()), p.clone());
    }

    #[test]
    fn in_place_ops_match(p in poly(), q in poly()) {
        let mut a = p.clone();
        a += &q;
        prop_assert_eq!(&a, &(&p + &q));
        a -= &q;
        prop_assert_eq!(a, p);
    }

    #[test]
    fn exact_division_inverts_multiplication(p in poly(), q in nonzero_poly()) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn json_round_trip(p in poly()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), x in point()) {
        let (pv, qv) = (p.eval(&x).unwrap(), q.eval(&x).unwrap());
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), &pv + &qv);
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), &pv * &qv);
    }

    #[test]
    fn packed_product_matches(p in int_poly(), q in int_poly()) {
        let (a, b) = (PackedPoly::from_poly(&p).unwrap(), PackedPoly::from_poly(&q).unwrap());
        prop_assert_eq!(a.to_poly(), p.clone());
        prop_assert_eq!(a.mul(&b).unwrap().to_poly(), &p * &q);
    }

    #[test]
    fn swapping_twice_is_identity(p in poly()) {
        let once = p.permute_rank_variables(&[2, 1]).unwrap();
        prop_assert_eq!(once.permute_rank_variables(&[2, 1]).unwrap(), p);
    }
}
