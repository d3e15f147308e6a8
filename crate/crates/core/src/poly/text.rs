//! Textual form of polynomials: terms in canonical order with explicit `*`
//! and `^`, e.g. `a2^2 + a0 - 1` or `-1/2*a0*z1`. Coefficients outside Q are
//! written as `cyclo(c0, c1, c2, c3)` tuples.

use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{Monomial, Poly, VarSet};
use crate::error::{Error, Result};
use crate::ring::{CycloElem, Expr, Field, Pos};

pub fn render<C: Field>(p: &Poly<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let mono = (!m.is_one()).then(|| m.render(p.vars()));
        let (neg, coef) = match c.to_rational() {
            Some(q) => {
                let mag = q.abs();
                let body = match &mono {
                    Some(mono) if One::is_one(&mag) => mono.clone(),
                    Some(mono) => format!("{mag}*{mono}"),
                    None => mag.to_string(),
                };
                (q.is_negative(), body)
            }
            None => {
                let body = match &mono {
                    Some(mono) => format!("{c}*{mono}"),
                    None => c.to_string(),
                };
                (false, body)
            }
        };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coef);
    }
    out
}

/// Parses the polynomial syntax over the given variable set.
pub fn parse_poly<C: Field>(src: &str, vars: &VarSet) -> Result<Poly<C>> {
    parse_poly_at(src, vars, Pos { line: 1, column: 1 })
}

pub fn parse_poly_at<C: Field>(src: &str, vars: &VarSet, origin: Pos) -> Result<Poly<C>> {
    let e = Expr::parse_at(src, origin)?;
    eval(&e, vars)
}

fn constant<C: Field>(x: CycloElem, vars: &VarSet) -> Result<Poly<C>> {
    match C::from_cyclo(&x) {
        Some(c) => Ok(Poly::constant(vars, c)),
        None => Err(Error::parse(0, 0, format!("coefficient {x} is not in {}", C::tag()))),
    }
}

fn eval<C: Field>(e: &Expr, vars: &VarSet) -> Result<Poly<C>> {
    Ok(match e {
        Expr::Int(n) => Poly::constant(vars, C::from_rational(&BigRational::from_integer(n.clone()))),
        Expr::ImagUnit | Expr::Sqrt3 | Expr::Cyclo(_) => constant(e.eval_cyclo()?, vars)?,
        Expr::Var(name, p) => {
            let k = vars.index(name).map_err(|_| {
                Error::parse(p.line, p.column, format!("unknown variable `{name}`"))
            })?;
            Poly::monomial(vars, Monomial::var(k, 1), C::one())
        }
        Expr::Neg(a) => eval::<C>(a, vars)?.neg(),
        Expr::Add(a, b) => eval::<C>(a, vars)?.add(&eval(b, vars)?),
        Expr::Sub(a, b) => eval::<C>(a, vars)?.sub(&eval(b, vars)?),
        Expr::Mul(a, b) => eval::<C>(a, vars)?.mul(&eval(b, vars)?),
        Expr::Div(a, b, p) => {
            let d = eval::<C>(b, vars)?;
            let c = d
                .constant_value()
                .ok_or_else(|| Error::parse(p.line, p.column, "division by a non-constant"))?;
            let inv = c
                .inv()
                .ok_or_else(|| Error::parse(p.line, p.column, "division by zero"))?;
            eval::<C>(a, vars)?.scale(&inv)
        }
        Expr::Pow(a, k, p) => {
            let k = u32::try_from(*k)
                .map_err(|_| Error::parse(p.line, p.column, "negative exponent in a polynomial"))?;
            eval::<C>(a, vars)?.pow(k)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::QPoly;
    use proptest::prelude::*;

    fn vs() -> VarSet {
        VarSet::global()
    }

    #[test]
    fn renders_canonical_order() {
        let p: QPoly = parse_poly("-1 + a0 + a2^2", &vs()).unwrap();
        assert_eq!(p.to_string(), "a2^2 + a0 - 1");
        let p: QPoly = parse_poly("-z2/2 + 3*z1*z2^2", &vs()).unwrap();
        assert_eq!(p.to_string(), "3*z1*z2^2 - 1/2*z2");
        let z: QPoly = Poly::zero(&vs());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn cyclo_coefficients_render_as_tuples() {
        let p: Poly<CycloElem> = parse_poly("I*z1 - 2", &vs()).unwrap();
        assert_eq!(p.to_string(), "cyclo(0, 0, 0, 1)*z1 - 2");
        let back: Poly<CycloElem> = parse_poly(&p.to_string(), &vs()).unwrap();
        assert_eq!(back, p);
        assert!(parse_poly::<BigRational>("I*z1", &vs()).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_poly::<BigRational>("z1/z2", &vs()).is_err());
        assert!(parse_poly::<BigRational>("q + 1", &vs()).is_err());
        assert!(parse_poly::<BigRational>("z1^-1", &vs()).is_err());
        assert!(parse_poly::<BigRational>("1/0", &vs()).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(
            (
                prop::array::uniform7(0u16..3),
                -20i64..20,
                1i64..6,
            ),
            0..8,
        )
        .prop_map(|terms| {
            let vars = VarSet::global();
            let terms = terms
                .into_iter()
                .map(|(e, n, d)| {
                    let mut m = Monomial::ONE;
                    m.0[..7].copy_from_slice(&e);
                    (m, BigRational::new(n.into(), d.into()))
                })
                .collect();
            Poly::from_terms(&vars, terms)
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(p in arb_poly()) {
            let back: QPoly = parse_poly(&p.to_string(), &VarSet::global()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
