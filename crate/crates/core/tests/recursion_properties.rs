use fracrec_core::poly::CycloRatFunc;
use fracrec_core::recursion::{
    build_condition_system, forward_step, initial_state, inverse_step, meeting_indices, AffineMap, GeneralSpec,
    RecursionKind, RecursionSpec,
};
use fracrec_core::ring::{parse_cyclo, rational, CycloElem};
use proptest::prelude::*;

fn arb_kind() -> impl Strategy<Value = RecursionKind> {
    prop::sample::select(RecursionKind::ALL.to_vec())
}

fn arb_q() -> impl Strategy<Value = CycloElem> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| CycloElem::from_rational(rational(n, d)))
}

fn arb_gauss() -> impl Strategy<Value = CycloElem> {
    (-6i64..=6, 1i64..=4, -6i64..=6).prop_map(|(n, d, m)| {
        &CycloElem::from_rational(rational(n, d)) + &(&CycloElem::i() * &CycloElem::from_integer(m))
    })
}

fn arb_spec() -> impl Strategy<Value = RecursionSpec> {
    (arb_kind(), prop::collection::vec(arb_gauss(), 3)).prop_map(|(kind, vals)| {
        let b: Vec<(&str, CycloElem)> = kind.live_params().iter().copied().zip(vals).collect();
        RecursionSpec::concrete(kind, &b).unwrap()
    })
}

fn arb_affine() -> impl Strategy<Value = AffineMap> {
    (arb_gauss(), arb_q()).prop_filter_map("a != 0", |(a, b)| AffineMap::new(a, b).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn inverse_undoes_forward(spec in arb_spec()) {
        let s0: Vec<CycloRatFunc> = initial_state(&spec);
        let next = forward_step(&spec, &s0).unwrap();
        let mut state = vec![next];
        state.extend(s0[1..].iter().rev().cloned());
        prop_assert_eq!(inverse_step(&spec, &state).unwrap(), s0[0].clone());
    }

    #[test]
    fn normalization_undoes_conjugation(spec in arb_spec(), g in arb_affine()) {
        // the reduced form is the canonical representative of the conjugacy class
        let conj = spec.conjugate(&g).unwrap();
        let (back, h) = conj.normalize_to_reduced().unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert!(conj.conjugate(&h).same_map(&spec.to_general().unwrap()));
    }

    #[test]
    fn meeting_indices_sum(order in 2usize..=3, k in 5usize..=30) {
        prop_assume!(k >= order + 2);
        let (i, j) = meeting_indices(order, k).unwrap();
        prop_assert_eq!(i + j, k + order + 1);
        prop_assert!(i >= j && i - j <= 1);
    }
}

#[test]
fn meeting_index_table() {
    let table = [((2, 5), (4, 4)), ((2, 6), (5, 4)), ((2, 8), (6, 5)), ((2, 12), (8, 7)), ((3, 8), (6, 6)), ((3, 12), (8, 8))];
    for ((order, k), ij) in table {
        assert_eq!(meeting_indices(order, k).unwrap(), ij, "order {order} period {k}");
    }
}

#[test]
fn lyness_normalizes_from_general_form() {
    let one = CycloElem::one;
    let g = GeneralSpec::order2(CycloElem::zero(), one(), one(), one(), CycloElem::zero()).unwrap();
    let (spec, map) = g.normalize_to_reduced().unwrap();
    assert_eq!(spec, RecursionSpec::lyness());
    assert!(map.is_identity());
    // conjugating Lyness by x -> 2x gives a general form that normalizes back
    let conj = spec.conjugate(&AffineMap::new(CycloElem::from_integer(2), CycloElem::zero()).unwrap()).unwrap();
    assert_eq!(conj.normalize_to_reduced().unwrap().0, RecursionSpec::lyness());
}

#[test]
fn condition_system_headers() {
    let s = build_condition_system(RecursionKind::Order2Reduced, 12).unwrap();
    assert_eq!(s.meeting, (8, 7));
    assert!(s.to_string().starts_with("# kind: order2\n# period: 12\n# meeting: i=8 j=7\n"));
    assert!(build_condition_system(RecursionKind::Order3Type2, 8).unwrap().has_constant_generator());
    assert!(!build_condition_system(RecursionKind::Order2Reduced, 5).unwrap().has_constant_generator());
    let _ = parse_cyclo("I").unwrap();
}
