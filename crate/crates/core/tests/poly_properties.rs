use fracrec_core::poly::{parse_poly, poly_gcd, resultant, Poly, QPoly, VarSet};
use fracrec_core::ring::{rational, Rational};
use proptest::prelude::*;

fn vars() -> VarSet {
    VarSet::new(&["x", "y", "z"]).unwrap()
}

fn arb_poly(max_deg: u16) -> impl Strategy<Value = QPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, 0..=1u16, -6i64..=6, 1i64..=4), 1..5).prop_map(|ts| {
        let v = vars();
        let mut p = Poly::zero(&v);
        for (a, b, c, n, d) in ts {
            let t = Poly::var(&v, "x").unwrap().pow(a as u32)
                .mul(&Poly::var(&v, "y").unwrap().pow(b as u32))
                .mul(&Poly::var(&v, "z").unwrap().pow(c as u32))
                .scale(&rational(n, d));
            p = p.add(&t);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms(p in arb_poly(2), q in arb_poly(2), r in arb_poly(2)) {
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(p in arb_poly(2), q in arb_poly(2), r in arb_poly(1)) {
        prop_assume!(!r.is_zero() && !p.is_zero() && !q.is_zero());
        let (a, b) = (p.mul(&r), q.mul(&r));
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
        prop_assert!(g.div_exact(&r).is_some());
    }

    #[test]
    fn resultant_commutes_with_specialization(p in arb_poly(2), q in arb_poly(2), y0 in -5i64..=5) {
        // res_x(p, q)(y0) = res_x(p(y0), q(y0)) when the x-degrees survive
        let v = vars();
        let spec = |f: &QPoly| f.eval_partial(&[("y", Rational::from_integer(y0.into()))]).unwrap();
        let (ps, qs) = (spec(&p), spec(&q));
        prop_assume!(p.degree_in(0).unwrap_or(0) + q.degree_in(0).unwrap_or(0) > 0);
        prop_assume!(ps.degree_in(0) == p.degree_in(0) && qs.degree_in(0) == q.degree_in(0));
        let r = resultant(&p, &q, 0).unwrap();
        let rs = resultant(&ps, &qs, 0).unwrap();
        prop_assert_eq!(spec(&r), rs);
        prop_assert_eq!(r.vars(), &v);
    }

    #[test]
    fn coeff_split_reassembles(p in arb_poly(3)) {
        let parts = p.coeff_split(&[0, 2]);
        let v = p.vars().clone();
        let mut sum = Poly::zero(&v);
        for (m, c) in &parts {
            prop_assert!(!c.uses_var(0) && !c.uses_var(2));
            sum = sum.add(&c.mul(&Poly::monomial(&v, *m, rational(1, 1))));
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn render_parse_round_trip(p in arb_poly(3)) {
        prop_assert_eq!(parse_poly::<Rational>(&p.to_string(), &vars()).unwrap(), p);
    }
}

#[test]
fn resultant_of_known_pair() {
    let v = vars();
    let p: QPoly = parse_poly("x^2 - y", &v).unwrap();
    let q: QPoly = parse_poly("x - 2", &v).unwrap();
    assert_eq!(resultant(&p, &q, 0).unwrap(), parse_poly("4 - y", &v).unwrap());
}
