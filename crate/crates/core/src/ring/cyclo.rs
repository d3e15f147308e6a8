//! Exact arithmetic in the cyclotomic field Q(ζ₁₂) = Q[x]/(x⁴ − x² + 1).
//!
//! Elements are stored in the power basis {1, ζ, ζ², ζ³}. The field contains
//! i = ζ³, √3 = 2ζ − ζ³ and every 12th root of unity, which is enough to hold
//! all coefficients that appear in the periodic recursions found by the solver.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloElem {
    c: [BigRational; 4],
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl CycloElem {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational, c3: BigRational) -> Self {
        CycloElem {
            c: [c0, c1, c2, c3],
        }
    }

    /// Builds an element from small integer coordinates.
    pub fn from_ints(c: [i64; 4]) -> Self {
        CycloElem {
            c: c.map(rat),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    /// The primitive 12th root of unity ζ with ζ ↦ e^{iπ/6} in the standard embedding.
    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// i = ζ³.
    pub fn i() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    /// √3 = 2ζ − ζ³.
    pub fn sqrt3() -> Self {
        Self::from_ints([0, 2, 0, -1])
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycloElem {
            c: [q, BigRational::zero(), BigRational::zero(), BigRational::zero()],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn coords(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(&self.c[0])
        } else {
            None
        }
    }

    /// Complex conjugate (ζ ↦ ζ¹¹ = ζ⁻¹).
    pub fn conj(&self) -> Self {
        // ζ⁻¹ = ζ − ζ³, ζ⁻² = 1 − ζ², ζ⁻³ = −ζ³
        let [c0, c1, c2, c3] = &self.c;
        CycloElem::new(c0 + c2, c1.clone(), -c2, -c1 - c3)
    }

    /// Multiplicative inverse, computed by solving the 4×4 multiplication system over Q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Column k holds the coordinates of self·ζᵏ.
        let mut cols = Vec::with_capacity(4);
        let mut cur = self.clone();
        for _ in 0..4 {
            cols.push(cur.c.clone());
            cur = &cur * &CycloElem::zeta();
        }
        let mut m: Vec<Vec<BigRational>> = (0..4)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..4).map(|k| cols[k][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication matrix of a nonzero field element is invertible");
            m.swap(col, pivot);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in col..5 {
                        let t = &f * &m[col][k];
                        m[r][k] -= t;
                    }
                }
            }
        }
        Ok(CycloElem::new(
            m[0][4].clone(),
            m[1][4].clone(),
            m[2][4].clone(),
            m[3][4].clone(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycloElem::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Signed integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<Self> {
        let p = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::InvalidArgument(format!("exponent {e} too large")))?;
        if e < 0 {
            Ok(self.inv()?.pow(p))
        } else {
            Ok(self.pow(p))
        }
    }

    /// Smallest n (necessarily dividing 12) with xⁿ = 1, or `None` if x is not a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        let one = CycloElem::one();
        let mut cur = self.clone();
        for n in 1..=12u32 {
            if cur == one {
                return (12 % n == 0).then_some(n);
            }
            cur = &cur * self;
        }
        None
    }

    /// Coordinates in the basis {1, i, √3, √3·i}: x = p + q·i + r·√3 + s·√3·i.
    pub fn gaussian_sqrt3_parts(&self) -> [BigRational; 4] {
        let [c0, c1, c2, c3] = &self.c;
        let two = rat(2);
        let s = c2 / &two;
        let r = c1 / &two;
        let p = c0 + &s;
        let q = c3 + &r;
        [p, q, r, s]
    }

    /// Renders the element with the tokens `I` and `SQRT3`, e.g. `1/2 - 1/2*I`.
    /// The output is accepted by [`super::parse_cyclo`].
    pub fn to_notation(&self) -> String {
        let [p, q, r, s] = self.gaussian_sqrt3_parts();
        let units = ["", "I", "SQRT3", "SQRT3*I"];
        let mut out = String::new();
        for (coef, unit) in [p, q, r, s].iter().zip(units) {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if unit.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(unit);
            } else {
                out.push_str(&format!("{mag}*{unit}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c3] = &self.c;
        write!(f, "cyclo({c0}, {c1}, {c2}, {c3})")
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        CycloElem {
            c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        CycloElem {
            c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        if let Some(q) = self.as_rational() {
            return CycloElem {
                c: std::array::from_fn(|k| q * &rhs.c[k]),
            };
        }
        if let Some(q) = rhs.as_rational() {
            return CycloElem {
                c: std::array::from_fn(|k| &self.c[k] * q),
            };
        }
        let mut p: [BigRational; 7] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        // ζ⁶ = −1, ζ⁵ = ζ³ − ζ, ζ⁴ = ζ² − 1
        let [p0, p1, p2, p3, p4, p5, p6] = p;
        CycloElem::new(p0 - &p6 - &p4, p1 - &p5, p2 + p4, p3 + p5)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: CycloElem) -> CycloElem {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_examples() {
        let one = CycloElem::one();
        assert!((&one + &(-&one)).is_zero());
        assert_eq!(&CycloElem::i() + &CycloElem::i(), CycloElem::from_ints([0, 0, 0, 2]));
        let a = CycloElem::new(q(1, 2), q(0, 1), q(0, 1), q(-1, 2));
        let b = CycloElem::new(q(1, 2), q(0, 1), q(0, 1), q(1, 2));
        assert_eq!(&a + &b, one);
    }

    #[test]
    fn mul_examples() {
        let i = CycloElem::i();
        assert_eq!(&i * &i, CycloElem::from_integer(-1));
        let s = CycloElem::sqrt3();
        assert_eq!(&s * &s, CycloElem::from_integer(3));
        let z2 = CycloElem::from_ints([0, 0, 1, 0]);
        assert_eq!(&(&z2 * &z2) * &z2, CycloElem::from_integer(-1));
    }

    #[test]
    fn zeta_powers() {
        let z = CycloElem::zeta();
        assert_eq!(z.pow(12), CycloElem::one());
        assert_eq!(z.pow(6), CycloElem::from_integer(-1));
        assert_eq!(z.pow(3), CycloElem::i());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycloElem::i().inv().unwrap(), CycloElem::from_ints([0, 0, 0, -1]));
        // ζ⁻¹ = −ζ⁵ = −(ζ³ − ζ) = ζ − ζ³
        let zinv = CycloElem::zeta().inv().unwrap();
        assert_eq!(zinv, CycloElem::from_ints([0, 1, 0, -1]));
        assert_eq!(&zinv * &CycloElem::zeta(), CycloElem::one());
        assert_eq!(CycloElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_is_inverse_on_roots_of_unity() {
        let z = CycloElem::zeta();
        for k in 0..12 {
            let w = z.pow(k);
            assert_eq!(w.conj(), w.inv().unwrap());
        }
    }

    #[test]
    fn root_of_unity_orders() {
        assert_eq!(CycloElem::i().root_of_unity_order(), Some(4));
        // (1 + √3·i)/2
        let a3 = &(&CycloElem::one() + &(&CycloElem::sqrt3() * &CycloElem::i()))
            * &CycloElem::from_rational(q(1, 2));
        assert_eq!(a3.root_of_unity_order(), Some(6));
        assert_eq!(CycloElem::from_integer(2).root_of_unity_order(), None);
        assert_eq!(CycloElem::zeta().root_of_unity_order(), Some(12));
        assert_eq!(CycloElem::one().root_of_unity_order(), Some(1));
        assert_eq!(CycloElem::from_integer(-1).root_of_unity_order(), Some(2));
    }

    #[test]
    fn notation_rendering() {
        let a = CycloElem::new(q(1, 2), q(0, 1), q(0, 1), q(-1, 2));
        assert_eq!(a.to_notation(), "1/2 - 1/2*I");
        assert_eq!(CycloElem::sqrt3().to_notation(), "SQRT3");
        assert_eq!(CycloElem::zero().to_notation(), "0");
        assert_eq!(CycloElem::zeta().to_notation(), "1/2*I + 1/2*SQRT3");
        assert_eq!(a.to_string(), "cyclo(1/2, 0, 0, -1/2)");
    }
}
