//! Binary floating point with an explicit precision, backed by `BigInt`.
//!
//! A value is `mant · 2^exp`. Every operation takes the target precision in
//! bits and rounds the mantissa to nearest.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

/// Rounds `m / 2^shift` to nearest, ties away from zero.
fn round_shift(m: &BigInt, shift: u64) -> BigInt {
    if shift == 0 {
        return m.clone();
    }
    let half = BigInt::one() << (shift - 1);
    let mag = (m.abs() + half) >> shift;
    if m.is_negative() {
        -mag
    } else {
        mag
    }
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    fn normalized(mant: BigInt, exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let bits = mant.bits();
        if bits > prec as u64 {
            let shift = bits - prec as u64;
            BigFloat {
                mant: round_shift(&mant, shift),
                exp: exp + shift as i64,
            }
        } else {
            BigFloat { mant, exp }
        }
    }

    pub fn from_int(n: i64) -> Self {
        BigFloat {
            mant: BigInt::from(n),
            exp: 0,
        }
    }

    pub fn from_bigint(n: BigInt, prec: u32) -> Self {
        Self::normalized(n, 0, prec)
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::from_bigint(q.numer().clone(), prec + 2).div(
            &Self::from_bigint(q.denom().clone(), prec + 2),
            prec,
        )
    }

    /// Exact rational value of the stored binary number.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let shift = (bits - 60).max(0);
        let m = (&self.mant >> shift as u64).to_f64().unwrap_or(0.0);
        m * 2f64.powi((self.exp + shift) as i32)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    /// Position of the highest set bit: |x| ∈ [2^(m−1), 2^m). `None` for zero.
    pub fn magnitude_bits(&self) -> Option<i64> {
        (!self.mant.is_zero()).then(|| self.mant.bits() as i64 + self.exp)
    }

    /// |x| < 2^e.
    pub fn abs_lt_pow2(&self, e: i64) -> bool {
        match self.magnitude_bits() {
            None => true,
            Some(m) => m <= e,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        if self.is_zero() {
            return Self::normalized(other.mant.clone(), other.exp, prec);
        }
        if other.is_zero() {
            return Self::normalized(self.mant.clone(), self.exp, prec);
        }
        let (ta, tb) = (self.magnitude_bits().unwrap(), other.magnitude_bits().unwrap());
        // A term far below the rounding unit of the other only affects rounding.
        let guard = prec as i64 + 4;
        let (a, b) = if ta - tb > guard {
            (self, Self::tiny_like(other, ta - guard))
        } else if tb - ta > guard {
            (other, Self::tiny_like(self, tb - guard))
        } else {
            return Self::add_exact(self, other, prec);
        };
        Self::add_exact(a, &b, prec)
    }

    /// A one-bit stand-in with the sign of `x`, placed below bit `floor`.
    fn tiny_like(x: &Self, floor: i64) -> Self {
        BigFloat {
            mant: if x.mant.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            },
            exp: floor - 2,
        }
    }

    fn add_exact(a: &Self, b: &Self, prec: u32) -> Self {
        let e = a.exp.min(b.exp);
        let ma = &a.mant << (a.exp - e) as u64;
        let mb = &b.mant << (b.exp - e) as u64;
        Self::normalized(ma + mb, e, prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        Self::normalized(&self.mant * &other.mant, self.exp + other.exp, prec)
    }

    /// Division; panics on a zero divisor.
    pub fn div(&self, other: &Self, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let want = prec as i64 + 2;
        let shift = (want + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let num = &self.mant << shift as u64;
        let (q, r) = num.div_rem(&other.mant);
        // Sticky bit keeps round-to-nearest honest after truncating division.
        let q = (q << 1u32)
            + if r.is_zero() {
                BigInt::zero()
            } else if num.sign() == other.mant.sign() {
                BigInt::one()
            } else {
                -BigInt::one()
            };
        Self::normalized(q, self.exp - other.exp - shift - 1, prec)
    }

    /// Square root of a non-negative value.
    pub fn sqrt(&self, prec: u32) -> Self {
        assert!(!self.mant.is_negative(), "square root of a negative BigFloat");
        if self.is_zero() {
            return Self::zero();
        }
        let want = 2 * (prec as i64 + 2);
        let mut shift = (want - self.mant.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let root = (&self.mant << shift as u64).sqrt();
        Self::normalized(root, (self.exp - shift) / 2, prec)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let d = self.sub(other, 64);
        match d.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
