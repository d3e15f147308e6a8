use fracrec_core::ring::{
    cyclo_embed_pair, cyclo_recognize, default_denom_bound, parse_cyclo, rational, CycloElem,
};
use proptest::prelude::*;

fn arb_cyclo() -> impl Strategy<Value = CycloElem> {
    prop::array::uniform4((-50i64..=50, 1i64..=40)).prop_map(|c| {
        let [a, b, d, e] = c.map(|(n, m)| rational(n, m));
        CycloElem::new(a, b, d, e)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, CycloElem::zero());
        prop_assert_eq!(&a * &CycloElem::one(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycloElem::one());
            prop_assert_eq!(a.div(&a).unwrap(), CycloElem::one());
        }
    }

    #[test]
    fn recognition_round_trip(a in arb_cyclo()) {
        let v = cyclo_embed_pair(&a, 256);
        prop_assert_eq!(cyclo_recognize(&v, &default_denom_bound()), Some(a));
    }

    #[test]
    fn notation_round_trip(a in arb_cyclo()) {
        prop_assert_eq!(parse_cyclo(&a.to_notation()).unwrap(), a.clone());
        prop_assert_eq!(parse_cyclo(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn embeddings_are_homomorphisms(a in arb_cyclo(), b in arb_cyclo()) {
        let (ea, eb) = (cyclo_embed_pair(&a, 200), cyclo_embed_pair(&b, 200));
        let eab = cyclo_embed_pair(&(&a * &b), 200);
        prop_assert!(eab.primary.sub(&ea.primary.mul(&eb.primary)).abs_lt_pow2(-150));
        prop_assert!(eab.secondary.sub(&ea.secondary.mul(&eb.secondary)).abs_lt_pow2(-150));
    }
}

#[test]
fn named_elements() {
    let zeta = CycloElem::zeta();
    assert_eq!(zeta.pow(3), CycloElem::i());
    assert_eq!(&(&zeta + &zeta) - &zeta.pow(3), CycloElem::sqrt3());
    assert_eq!(zeta.root_of_unity_order(), Some(12));
    assert_eq!(CycloElem::i().root_of_unity_order(), Some(4));
    assert_eq!(CycloElem::from_integer(2).root_of_unity_order(), None);
    assert_eq!(parse_cyclo("SQRT3^2").unwrap(), CycloElem::from_integer(3));
}
