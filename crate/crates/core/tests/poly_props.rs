use std::collections::BTreeMap;

use feyncomb::{Monomial, Poly, Poly64, Rational, Var};
use num_rational::Rational64;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "a.e1"];

fn monomial(exps: &[u32]) -> Monomial {
    Monomial::from_powers(VARS.iter().zip(exps).filter(|(_, &e)| e > 0).map(|(v, &e)| (Var::new(v), e)))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i64..=4, 1i64..=3, prop::collection::vec(0u32..=2, 3)), 0..5).prop_map(|terms| {
        Poly::from_terms(terms.into_iter().map(|(n, d, e)| (monomial(&e), Rational::new(n.into(), d.into()))))
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &Poly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in poly(), q in poly(), s in poly(), t in poly()) {
        let sub = BTreeMap::from([(Var::new("x"), s), (Var::new("y"), t)]);
        prop_assert_eq!((&p * &q).substitute(&sub), &p.substitute(&sub) * &q.substitute(&sub));
        prop_assert_eq!((&p + &q).substitute(&sub), &p.substitute(&sub) + &q.substitute(&sub));
    }

    #[test]
    fn canonical_string_decides_equality(p in poly(), q in poly()) {
        prop_assert_eq!(p.canonical_string() == q.canonical_string(), (&p - &q).is_zero());
    }

    #[test]
    fn canonical_string_round_trips(p in poly()) {
        prop_assert_eq!(Poly::parse(&p.canonical_string()).unwrap(), p);
    }

    #[test]
    fn small_scalars_agree_with_big(p in poly(), q in poly()) {
        let small = |p: &Poly| -> Poly64 {
            p.map_coefficients(|c| Rational64::new(
                i64::try_from(c.numer()).unwrap(),
                i64::try_from(c.denom()).unwrap(),
            ))
        };
        prop_assert_eq!((&p * &q).canonical_string(), (&small(&p) * &small(&q)).canonical_string());
    }
}
