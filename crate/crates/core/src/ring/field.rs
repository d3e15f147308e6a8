use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycloElem;

/// Exact coefficient field used by polynomials and rational functions.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &BigRational) -> Self;
    /// The value as a rational, when it lies in Q.
    fn to_rational(&self) -> Option<BigRational>;
    /// Converts a field element of Q(ζ₁₂), when it lies in this field.
    fn from_cyclo(x: &CycloElem) -> Option<Self>;
    fn to_cyclo(&self) -> CycloElem;
    /// Short tag used when rendering and comparing fields.
    fn tag() -> FieldTag;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Whether the value is a (rational) negative number, used to render `- c`.
    fn is_negative_rational(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_negative())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    Cyclotomic12,
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Rational => f.write_str("Q"),
            FieldTag::Cyclotomic12 => f.write_str("Q(zeta12)"),
        }
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
    fn from_cyclo(x: &CycloElem) -> Option<Self> {
        x.as_rational().cloned()
    }
    fn to_cyclo(&self) -> CycloElem {
        CycloElem::from_rational(self.clone())
    }
    fn tag() -> FieldTag {
        FieldTag::Rational
    }
}

impl Field for CycloElem {
    fn zero() -> Self {
        CycloElem::zero()
    }
    fn one() -> Self {
        CycloElem::one()
    }
    fn is_zero(&self) -> bool {
        CycloElem::is_zero(self)
    }
    fn is_one(&self) -> bool {
        *self == CycloElem::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        CycloElem::inv(self).ok()
    }
    fn from_rational(q: &BigRational) -> Self {
        CycloElem::from_rational(q.clone())
    }
    fn to_rational(&self) -> Option<BigRational> {
        self.as_rational().cloned()
    }
    fn from_cyclo(x: &CycloElem) -> Option<Self> {
        Some(x.clone())
    }
    fn to_cyclo(&self) -> CycloElem {
        self.clone()
    }
    fn tag() -> FieldTag {
        FieldTag::Cyclotomic12
    }
}
