use std::collections::BTreeSet;

use fracrec_core::poly::{parse_poly, QPoly, VarSet};
use fracrec_core::recursion::{build_condition_system, RecursionKind};
use fracrec_core::ring::{parse_cyclo, rational, CycloElem, Rational};
use fracrec_core::solver::{solve_system, verify_assignment, Assignment, PolySystem, SolverConfig};
use proptest::prelude::*;

fn solve(kind: RecursionKind, k: usize) -> BTreeSet<Assignment> {
    let sys = PolySystem::from_conditions(&build_condition_system(kind, k).unwrap()).unwrap();
    solve_system(&sys, &SolverConfig::default()).unwrap().solutions.into_iter().collect()
}

fn a(pairs: &[(&str, &str)]) -> Assignment {
    Assignment(pairs.iter().map(|(k, v)| (k.to_string(), parse_cyclo(v).unwrap())).collect())
}

// Expected solution sets come from an independent computer-algebra run on
// the same meeting-condition systems.
#[test]
fn order2_systems_match_reference() {
    use RecursionKind::Order2Reduced as O2;
    for k in [4, 7, 9, 11] {
        assert!(solve(O2, k).is_empty(), "period {k}");
    }
    assert_eq!(solve(O2, 10), [a(&[("a0", "1"), ("a2", "0")])].into());
    let twelve = solve(O2, 12);
    assert_eq!(twelve.len(), 5);
    assert!(twelve.contains(&a(&[("a0", "0"), ("a2", "0")])));
    for s in ["1 + I/2 + SQRT3/2", "1 + I/2 - SQRT3/2"] {
        assert!(twelve.contains(&a(&[("a0", s), ("a2", "-I")])));
    }
}

#[test]
fn type1_systems_match_reference() {
    use RecursionKind::Order3Type1 as T1;
    assert_eq!(
        solve(T1, 8),
        [a(&[("a0", "-1"), ("a1", "-1"), ("a3", "0")]), a(&[("a0", "1"), ("a1", "1"), ("a3", "0")])].into()
    );
    let twelve = solve(T1, 12);
    assert_eq!(twelve.len(), 3);
    assert!(twelve.contains(&a(&[("a0", "-1/2 + SQRT3*I/2"), ("a1", "1/2 + SQRT3*I/2"), ("a3", "1/2 - SQRT3*I/2")])));
}

fn arb_q() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rational(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    // Planted zeros: {(x − r)(x² + 1), (y − s)(y − t)} has exactly the six
    // points {r, ±i} × {s, t}, all of which must come back exactly.
    #[test]
    fn planted_solutions_recovered(r in arb_q(), s in arb_q(), t in arb_q()) {
        let v = VarSet::new(&["x", "y"]).unwrap();
        let f: QPoly = parse_poly(&format!("(x - ({r}))*(x^2 + 1)"), &v).unwrap();
        let g: QPoly = parse_poly(&format!("(y - ({s}))*(y - ({t}))"), &v).unwrap();
        let sys = PolySystem::new(vec![f, g], v).unwrap();
        let out = solve_system(&sys, &SolverConfig::default()).unwrap();
        let xs = [CycloElem::from_rational(r.clone()), CycloElem::i(), -CycloElem::i()];
        let ys = [CycloElem::from_rational(s.clone()), CycloElem::from_rational(t.clone())];
        let mut expected = BTreeSet::new();
        for x in &xs {
            for y in &ys {
                expected.insert(Assignment([("x".to_string(), x.clone()), ("y".to_string(), y.clone())].into()));
            }
        }
        prop_assert_eq!(out.solutions.iter().cloned().collect::<BTreeSet<_>>(), expected);
        prop_assert_eq!(out.outside_field_count, 0);
        for sol in &out.solutions {
            prop_assert!(verify_assignment(&sys, sol));
        }
    }

    // Starved or poisoned root isolation may lose solutions but never emits
    // a wrong one.
    #[test]
    fn firewall_under_bad_numerics(r in arb_q(), s in arb_q(), bits in 64u32..=96, poison in any::<bool>()) {
        // y is eliminated first, so back-substitution starts from f(x)
        let v = VarSet::new(&["y", "x"]).unwrap();
        let f: QPoly = parse_poly(&format!("(x^2 - 3)*(x - ({r}))*(x^2 + x + 1)"), &v).unwrap();
        let g: QPoly = parse_poly(&format!("y^2 - 2*y*x + ({s})"), &v).unwrap();
        let sys = PolySystem::new(vec![f, g], v).unwrap();
        let cfg = SolverConfig { perturb_candidates: poison, ..SolverConfig::starved(bits) };
        let out = solve_system(&sys, &cfg).unwrap();
        for sol in &out.solutions {
            prop_assert!(verify_assignment(&sys, sol));
        }
        if poison {
            prop_assert!(out.solutions.is_empty());
        }
    }
}
