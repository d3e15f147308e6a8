//! High-precision complex approximations, the two complex embeddings of
//! Q(ζ₁₂) and recognition of field elements from their numeric images.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bigfloat::BigFloat;
use super::CycloElem;

/// Working precision used when none is requested explicitly.
pub const DEFAULT_PRECISION: u32 = 256;

/// Complex number with binary floating real and imaginary parts.
#[derive(Clone, PartialEq, Eq)]
pub struct ComplexApprox {
    pub re: BigFloat,
    pub im: BigFloat,
    pub precision: u32,
}

impl ComplexApprox {
    pub fn new(re: BigFloat, im: BigFloat, precision: u32) -> Self {
        ComplexApprox { re, im, precision }
    }

    pub fn zero(precision: u32) -> Self {
        Self::new(BigFloat::zero(), BigFloat::zero(), precision)
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, precision: u32) -> Self {
        Self::new(
            BigFloat::from_rational(re, precision),
            BigFloat::from_rational(im, precision),
            precision,
        )
    }

    pub fn from_f64(re: f64, im: f64, precision: u32) -> Self {
        let cv = |x: f64| BigRational::from_float(x).expect("finite float");
        Self::from_rationals(&cv(re), &cv(im), precision)
    }

    fn prec_with(&self, other: &Self) -> u32 {
        self.precision.max(other.precision)
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self::new(
            self.re.add(&BigFloat::zero(), precision),
            self.im.add(&BigFloat::zero(), precision),
            precision,
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec_with(o);
        Self::new(self.re.add(&o.re, p), self.im.add(&o.im, p), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec_with(o);
        Self::new(self.re.sub(&o.re, p), self.im.sub(&o.im, p), p)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.re.neg(), self.im.neg(), self.precision)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), self.im.neg(), self.precision)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec_with(o);
        let w = p + 8;
        let re = self.re.mul(&o.re, w).sub(&self.im.mul(&o.im, w), p);
        let im = self.re.mul(&o.im, w).add(&self.im.mul(&o.re, w), p);
        Self::new(re, im, p)
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        let p = self.precision;
        Self::new(self.re.mul(s, p), self.im.mul(s, p), p)
    }

    /// |z|².
    pub fn norm_sqr(&self) -> BigFloat {
        let w = self.precision + 8;
        self.re
            .mul(&self.re, w)
            .add(&self.im.mul(&self.im, w), self.precision)
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt(self.precision)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Division; `None` when the divisor is exactly zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let p = self.prec_with(o);
        let w = p + 16;
        let n = o.norm_sqr().add(&BigFloat::zero(), w);
        let num = self.mul(&o.conj()).with_precision(w);
        Some(Self::new(num.re.div(&n, p), num.im.div(&n, p), p))
    }

    /// |z| < 2^e, decided from |z|² < 2^(2e) up to one bit of slack.
    pub fn abs_lt_pow2(&self, e: i64) -> bool {
        self.norm_sqr().abs_lt_pow2(2 * e)
    }

    /// Binary logarithm of |z| rounded up, `None` for zero.
    pub fn magnitude_bits(&self) -> Option<i64> {
        let a = self.re.magnitude_bits();
        let b = self.im.magnitude_bits();
        match (a, b) {
            (None, None) => None,
            (x, y) => Some(x.unwrap_or(i64::MIN).max(y.unwrap_or(i64::MIN)) + 1),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "{re:e}{im:+e}i@{}", self.precision)
    }
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "{re:.12} {} {:.12}i", if im < 0.0 { '-' } else { '+' }, im.abs())
    }
}

/// Which complex embedding ζ ↦ e^{kπi/6} is meant. `Primary` is k = 1 and
/// `Secondary` is k = 5; the two are not complex conjugates of each other, so
/// together they determine all four rational coordinates of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Embedding {
    Primary,
    Secondary,
}

impl Embedding {
    /// Sign of √3 under the embedding.
    fn sqrt3_sign(self) -> i64 {
        match self {
            Embedding::Primary => 1,
            Embedding::Secondary => -1,
        }
    }

    /// Image of an element under this embedding, exactly as an element of
    /// the embedding's own Q(ζ₁₂) (i.e. the Galois conjugate).
    pub fn conjugate_exact(self, x: &CycloElem) -> CycloElem {
        match self {
            Embedding::Primary => x.clone(),
            // ζ ↦ ζ⁵ = ζ³ − ζ, ζ² ↦ ζ¹⁰ = 1 − ζ², ζ³ ↦ ζ¹⁵ = ζ³
            Embedding::Secondary => {
                let [c0, c1, c2, c3] = x.coords();
                CycloElem::new(c0 + c2, -c1, -c2, c1 + c3)
            }
        }
    }
}

pub fn sqrt3(precision: u32) -> BigFloat {
    BigFloat::from_int(3).sqrt(precision + 4)
}

/// Evaluates c0 + c1·ω + c2·ω² + c3·ω³ at ω = e^{iπ/6} (or e^{5iπ/6} for the
/// secondary embedding).
pub fn embed_with(x: &CycloElem, embedding: Embedding, precision: u32) -> ComplexApprox {
    let [p, q, r, s] = x.gaussian_sqrt3_parts();
    // x = p + q·i + r·√3 + s·√3·i
    let t = BigRational::from_integer(BigInt::from(embedding.sqrt3_sign()));
    let w = precision + 8;
    let root3 = sqrt3(w);
    let re = BigFloat::from_rational(&p, w).add(
        &BigFloat::from_rational(&(&r * &t), w).mul(&root3, w),
        precision,
    );
    let im = BigFloat::from_rational(&q, w).add(
        &BigFloat::from_rational(&(&s * &t), w).mul(&root3, w),
        precision,
    );
    ComplexApprox::new(re, im, precision)
}

/// Primary complex embedding ζ ↦ cos(π/6) + i·sin(π/6).
pub fn cyclo_embed(x: &CycloElem, precision: u32) -> ComplexApprox {
    assert!(precision >= 64, "embedding precision must be at least 64 bits");
    embed_with(x, Embedding::Primary, precision)
}

/// Images of one element under both non-conjugate embeddings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloApprox {
    pub primary: ComplexApprox,
    pub secondary: ComplexApprox,
}

impl CycloApprox {
    pub fn precision(&self) -> u32 {
        self.primary.precision.min(self.secondary.precision)
    }
}

pub fn cyclo_embed_pair(x: &CycloElem, precision: u32) -> CycloApprox {
    CycloApprox {
        primary: cyclo_embed(x, precision),
        secondary: embed_with(x, Embedding::Secondary, precision),
    }
}

/// Best rational approximation of `x` with denominator at most `bound`,
/// taken from the continued-fraction convergents of `x`.
pub fn rationalize(x: &BigRational, bound: &BigInt) -> BigRational {
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > bound {
            break;
        }
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    if k1.is_zero() {
        // bound < 1 cannot happen for callers; fall back to the integer part.
        return BigRational::from_integer(x.floor().to_integer());
    }
    BigRational::new(h1, k1)
}

/// Recovers x ∈ Q(ζ₁₂) from its two embeddings.
///
/// The 4×4 real system Re/Im of both embeddings against the power basis is
/// solved in closed form, each coordinate is rationalized with denominator at
/// most `denom_bound`, and the candidate is accepted only if both re-embeddings
/// agree with the input to within 2^(−precision/2). The result is a candidate:
/// callers must still certify it exactly.
pub fn cyclo_recognize(v: &CycloApprox, denom_bound: &BigInt) -> Option<CycloElem> {
    let prec = v.precision();
    if !denom_bound.is_positive() {
        return None;
    }
    let w = prec + 16;
    let r3 = sqrt3(w);
    let half = BigFloat::from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)), w);
    let (r1, i1) = (&v.primary.re, &v.primary.im);
    let (r5, i5) = (&v.secondary.re, &v.secondary.im);
    // Re σ1 − Re σ5 = c1·√3, Im σ1 − Im σ5 = c2·√3
    let c1 = r1.sub(r5, w).div(&r3, w);
    let c2 = i1.sub(i5, w).div(&r3, w);
    let c0 = r1.add(r5, w).mul(&half, w).sub(&c2.mul(&half, w), w);
    let c3 = i1.add(i5, w).mul(&half, w).sub(&c1.mul(&half, w), w);
    let coords: Vec<BigRational> = [c0, c1, c2, c3]
        .iter()
        .map(|c| rationalize(&c.to_rational(), denom_bound))
        .collect();
    let candidate = CycloElem::new(
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    );
    let tol = -((prec / 2) as i64);
    let back = cyclo_embed_pair(&candidate, prec + 16);
    let ok = back.primary.sub(&v.primary).abs_lt_pow2(tol)
        && back.secondary.sub(&v.secondary).abs_lt_pow2(tol);
    ok.then_some(candidate)
}

/// Default recognition denominator bound, 2³².
pub fn default_denom_bound() -> BigInt {
    BigInt::one() << 32u32
}

/// Least common multiple of the coordinate denominators.
pub fn common_denominator(x: &CycloElem) -> BigInt {
    x.coords()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}
