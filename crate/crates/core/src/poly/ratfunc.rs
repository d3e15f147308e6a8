//! Rational functions kept in lowest terms with a monic denominator.

use std::fmt;

use num_rational::BigRational;

use super::gcd::gcd_unit;
use super::{Poly, VarSet};
use crate::error::{Error, Result};
use crate::ring::{CycloElem, Field};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<C: Field> {
    num: Poly<C>,
    den: Poly<C>,
}

pub type QRatFunc = RatFunc<BigRational>;
pub type CycloRatFunc = RatFunc<CycloElem>;

fn exact<C: Field>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    a.div_exact(b).expect("gcd divides its arguments")
}

impl<C: Field> RatFunc<C> {
    /// Builds `num / den` and normalizes it.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        num.check_compatible(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = gcd_unit(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (exact(&num, &g), exact(&den, &g))
        };
        Ok(Self::gauge(num, den))
    }

    fn gauge(num: Poly<C>, den: Poly<C>) -> Self {
        let vars = num.vars().clone();
        if num.is_zero() {
            return Self { num, den: Poly::one(&vars) };
        }
        let lc = den.leading_coeff();
        if lc.is_one() {
            return Self { num, den };
        }
        let inv = lc.inv().expect("nonzero denominator");
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        let den = Poly::one(p.vars());
        Self { num: p, den }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_poly(Poly::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_poly(Poly::one(vars))
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self> {
        Ok(Self::from_poly(Poly::var(vars, name)?))
    }

    pub fn constant(vars: &VarSet, c: C) -> Self {
        Self::from_poly(Poly::constant(vars, c))
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.num.check_compatible(&o.num)?;
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone());
        }
        let d = gcd_unit(&self.den, &o.den);
        if d.is_constant() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return Ok(Self::gauge(num, self.den.mul(&o.den)));
        }
        let sd = exact(&self.den, &d);
        let od = exact(&o.den, &d);
        let num = self.num.mul(&od).add(&o.num.mul(&sd));
        let den = self.den.mul(&od);
        let g = gcd_unit(&num, &d);
        if g.is_constant() {
            Ok(Self::gauge(num, den))
        } else {
            Ok(Self::gauge(exact(&num, &g), exact(&den, &g)))
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.num.check_compatible(&o.num)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(self.vars()));
        }
        let g1 = gcd_unit(&self.num, &o.den);
        let g2 = gcd_unit(&o.num, &self.den);
        let num = exact(&self.num, &g1).mul(&exact(&o.num, &g2));
        let den = exact(&self.den, &g2).mul(&exact(&o.den, &g1));
        Ok(Self::gauge(num, den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::gauge(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.inv()?)
    }

    /// Multiplies by a polynomial.
    pub fn mul_poly(&self, p: &Poly<C>) -> Result<Self> {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn add_poly(&self, p: &Poly<C>) -> Result<Self> {
        self.num.check_compatible(p)?;
        Ok(Self { num: self.num.add(&p.mul(&self.den)), den: self.den.clone() })
    }

    /// Substitutes values for some variables. Fails when the denominator
    /// vanishes identically after substitution.
    pub fn eval_indices(&self, bindings: &[(usize, C)]) -> Result<Self> {
        Self::new(self.num.eval_indices(bindings), self.den.eval_indices(bindings))
    }

    /// Value at a full point, or `None` where the denominator vanishes.
    pub fn eval_all(&self, point: &[C]) -> Option<C> {
        let d = self.den.eval_all(point);
        let inv = d.inv()?;
        Some(self.num.eval_all(point).mul(&inv))
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Result<RatFunc<D>> {
        RatFunc::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

impl<C: Field> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<C: Field> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, QPoly};
    use proptest::prelude::*;

    fn vs() -> VarSet {
        VarSet::new(&["z1", "z2", "a0"]).unwrap()
    }

    fn p(s: &str) -> QPoly {
        parse_poly(s, &vs()).unwrap()
    }

    fn rf(n: &str, d: &str) -> QRatFunc {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let s = rf("1", "z1").add(&rf("1", "z2")).unwrap();
        assert_eq!(s.num(), &p("z1 + z2"));
        assert_eq!(s.den(), &p("z1*z2"));
        let c = rf("z1^2 - z2^2", "z1 + z2");
        assert_eq!(c.num(), &p("z1 - z2"));
        assert!(c.den().is_one());
        let f = rf("z1 + 3*a0", "2*z2^2 - z1");
        assert!(f.sub(&f).unwrap().is_zero());
        assert!(f.sub(&f).unwrap().den().is_one());
        assert!(f.div(&QRatFunc::zero(&vs())).is_err());
        assert!(RatFunc::new(p("z1"), p("0")).is_err());
    }

    #[test]
    fn gauge_fixes_denominator_leading_coefficient() {
        let f = rf("z1", "-2*z2 + 4");
        assert_eq!(f.den(), &p("z2 - 2"));
        assert_eq!(f.num(), &p("-1/2*z1"));
    }

    #[test]
    fn cross_cancellation() {
        let f = rf("z1 - a0", "z2 + 1");
        let g = rf("(z2 + 1)*z2", "(z1 - a0)*z1");
        let h = f.mul(&g).unwrap();
        assert_eq!(h, rf("z2", "z1"));
        assert_eq!(h.mul(&h.inv().unwrap()).unwrap(), QRatFunc::one(&vs()));
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec((0u16..3, 0u16..3, 0u16..2, -4i64..5), 1..4).prop_map(|ts| {
            let vars = vs();
            let terms = ts
                .into_iter()
                .map(|(a, b, c, k)| {
                    let mut m = crate::poly::Monomial::ONE;
                    m.0[0] = a;
                    m.0[1] = b;
                    m.0[2] = c;
                    (m, BigRational::from_integer(k.into()))
                })
                .collect();
            Poly::from_terms(&vars, terms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn normalization_idempotent_and_coprime(
            a in small_poly(), b in small_poly(), c in small_poly(), d in small_poly()
        ) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            // build with a shared factor so cancellation is exercised
            let f = RatFunc::new(a.mul(&c), b.mul(&c.add(&d))).ok();
            prop_assume!(f.is_some());
            let f = f.unwrap();
            let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(&again, &f);
            let g = crate::poly::poly_gcd(f.num(), f.den()).unwrap();
            prop_assert!(g.is_one() || f.num().is_zero());
            prop_assert!(f.den().leading_coeff().is_one());
        }
    }
}
