use fracrec_core::recursion::{AffineMap, RecursionKind, RecursionSpec};
use fracrec_core::ring::{parse_cyclo, rational, CycloElem};
use fracrec_core::verify::{
    corpus_check, is_periodic_numeric, is_periodic_symbolic, minimal_period, DEFAULT_KMAX,
};
use proptest::prelude::*;

fn spec(kind: RecursionKind, b: &[(&str, &str)]) -> RecursionSpec {
    let b: Vec<(&str, CycloElem)> = b.iter().map(|(k, v)| (*k, parse_cyclo(v).unwrap())).collect();
    RecursionSpec::concrete(kind, &b).unwrap()
}

/// Every recursion the searches report, with its minimal period.
fn solution_specs() -> Vec<(RecursionSpec, usize)> {
    use RecursionKind::*;
    vec![
        (RecursionSpec::lyness(), 5),
        (spec(Order2Reduced, &[("a0", "0"), ("a2", "0")]), 6),
        (spec(Order2Reduced, &[("a0", "(1 - I)/2"), ("a2", "I")]), 8),
        (spec(Order2Reduced, &[("a0", "(1 + I)/2"), ("a2", "-I")]), 8),
        (spec(Order2Reduced, &[("a0", "1 + I/2 + SQRT3/2"), ("a2", "-I")]), 12),
        (spec(Order2Reduced, &[("a0", "1 - I/2 - SQRT3/2"), ("a2", "I")]), 12),
        (spec(Order3Type1, &[("a0", "1"), ("a1", "1"), ("a3", "0")]), 8),
        (spec(Order3Type1, &[("a0", "-1"), ("a1", "-1"), ("a3", "0")]), 8),
        (spec(Order3Type1, &[("a0", "-1/2"), ("a1", "-1"), ("a3", "-1")]), 12),
        (spec(Order3Type1, &[("a0", "-1/2 + SQRT3*I/2"), ("a1", "1/2 + SQRT3*I/2"), ("a3", "1/2 - SQRT3*I/2")]), 12),
    ]
}

#[test]
fn symbolic_and_numeric_agree_on_solutions() {
    for (s, k) in solution_specs() {
        assert!(is_periodic_symbolic(&s, k), "{s}");
        assert_eq!(minimal_period(&s, DEFAULT_KMAX), Some(k), "{s}");
        let n = is_periodic_numeric(&s, k, 20, 256, 1).unwrap();
        assert!(n.periodic, "{s}: {n:?}");
        // multiples stay periodic, proper non-multiples do not
        for m in 1..=DEFAULT_KMAX {
            assert_eq!(is_periodic_symbolic(&s, m), m % k == 0, "{s} at {m}");
        }
    }
}

#[test]
fn conjugation_preserves_minimal_period() {
    let maps = [("2", "0"), ("-1/3", "5/2"), ("I", "1"), ("1 + I", "-2")];
    for (s, k) in solution_specs() {
        for (a, b) in maps {
            let g = AffineMap::new(parse_cyclo(a).unwrap(), parse_cyclo(b).unwrap()).unwrap();
            let conj = s.conjugate(&g).unwrap();
            // symbolic: the conjugated coefficients stay in Q(ζ₁₂)
            assert_eq!(minimal_period(&conj, DEFAULT_KMAX), Some(k));
            // numeric: periodic at k, not at the proper divisors
            assert!(is_periodic_numeric(&conj, k, 4, 192, 3).unwrap().periodic);
            for d in (1..k).filter(|d| k % d == 0) {
                assert!(!is_periodic_numeric(&conj, d, 4, 192, 3).unwrap().periodic, "{conj} at {d}");
            }
        }
    }
}

#[test]
fn corpus_report() {
    let r = corpus_check();
    assert!(r.passed());
    let periods: Vec<_> = r.entries.iter().map(|e| e.minimal_period).collect();
    assert_eq!(periods, vec![Some(5), Some(6), Some(8), Some(8)]);
    for e in &r.entries {
        let n = e.numeric.as_ref().unwrap();
        assert!(n.max_residual_log2.map_or(true, |b| b < -128));
    }
}

fn known(a0: &CycloElem, a2: &CycloElem) -> bool {
    let z = CycloElem::zero();
    (a2 == &z) && (a0 == &z || a0 == &CycloElem::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    // Random rational order-2 recursions away from the known solutions are
    // not periodic with any period up to 12.
    #[test]
    fn random_order2_not_periodic(n0 in -20i64..=20, d0 in 1i64..=10, n2 in -20i64..=20, d2 in 1i64..=10) {
        let (a0, a2) = (CycloElem::from_rational(rational(n0, d0)), CycloElem::from_rational(rational(n2, d2)));
        prop_assume!(!known(&a0, &a2));
        let s = RecursionSpec::concrete(RecursionKind::Order2Reduced, &[("a0", a0), ("a2", a2)]).unwrap();
        prop_assert_eq!(minimal_period(&s, 12), None);
    }

    #[test]
    fn divisor_structure(idx in 0usize..10, m in 1usize..=4) {
        let (s, k) = &solution_specs()[idx];
        prop_assume!(k * m <= DEFAULT_KMAX);
        prop_assert!(is_periodic_symbolic(s, k * m));
    }
}
