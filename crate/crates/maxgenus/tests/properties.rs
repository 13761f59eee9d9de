//! Property tests: field axioms, t-polynomial ring laws, truncated products
//! and the text-grammar round trip.

use proptest::prelude::*;

use maxgenus::field::{FieldSpec, TParamPoly};
use maxgenus::poly::{parse_poly, Monomial, Ring, WeightedPolynomial};

const PRIMES: [u64; 8] = [2, 3, 5, 7, 101, 32003, 65537, 1000003];

fn prime_strategy() -> impl Strategy<Value = FieldSpec> {
    (0..PRIMES.len()).prop_map(|i| FieldSpec::prime(PRIMES[i]).unwrap())
}

fn tpoly_strategy(field: FieldSpec) -> impl Strategy<Value = TParamPoly> {
    proptest::collection::vec(0i64..1_000_000, 0..6)
        .prop_map(move |cs| TParamPoly::new(field, cs.iter().map(|c| field.from_i64(*c)).collect()))
}

fn poly_strategy(field: FieldSpec) -> impl Strategy<Value = WeightedPolynomial> {
    proptest::collection::vec(((0u32..6, 0u32..6, 0u32..4), -50i64..50), 0..8).prop_map(
        move |terms| {
            let mut p = WeightedPolynomial::zero(Ring::Xyz, field);
            for ((a, b, c), v) in terms {
                p.add_term(Monomial::new3(a, b, c), field.from_i64(v));
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn field_inverse_cancels(field in prime_strategy(), n in 1i64..1_000_000) {
        let x = field.from_i64(n);
        prop_assume!(!field.is_zero(&x));
        let inv = field.inv(&x).unwrap();
        prop_assert!(field.is_one(&field.mul(&x, &inv)));
    }

    #[test]
    fn rational_inverse_cancels(num in 1i64..10_000, den in 1i64..10_000) {
        let f = FieldSpec::Rational;
        let x = f.from_fraction(num, den).unwrap();
        prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
    }

    #[test]
    fn tpoly_ring_laws(
        (a, b, c) in prime_strategy().prop_flat_map(|f| {
            (tpoly_strategy(f), tpoly_strategy(f), tpoly_strategy(f))
        })
    ) {
        // commutativity, associativity, distributivity
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn truncated_product_laws(
        (p, q, cap) in prime_strategy().prop_flat_map(|f| {
            (poly_strategy(f), poly_strategy(f), 1u32..10)
        })
    ) {
        let pq = p.mul_mod_xy_power(&q, cap).unwrap();
        prop_assert_eq!(&pq, &q.mul_mod_xy_power(&p, cap).unwrap());
        prop_assert_eq!(&pq, &p.mul(&q).unwrap().truncate_xy_power(cap));
        // truncation is idempotent
        prop_assert_eq!(&pq, &pq.clone().truncate_xy_power(cap));
    }

    #[test]
    fn display_round_trips_fp(
        (field, p) in prime_strategy().prop_flat_map(|f| (Just(f), poly_strategy(f)))
    ) {
        let text = p.to_string();
        let back = parse_poly(&text, Ring::Xyz, field).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn display_round_trips_rational(
        terms in proptest::collection::vec(((0u32..5, 0u32..5, 0u32..4), -30i64..30, 1i64..12), 0..6)
    ) {
        let f = FieldSpec::Rational;
        let mut p = WeightedPolynomial::zero(Ring::Xyz, f);
        for ((a, b, c), num, den) in terms {
            let coeff = f.from_fraction(num, den).unwrap();
            p.add_term(Monomial::new3(a, b, c), coeff);
        }
        let back = parse_poly(&p.to_string(), Ring::Xyz, f).unwrap();
        prop_assert_eq!(back, p);
    }
}
