//! Exact scalars: rationals, the cyclotomic field Q(ζ₁₂) and its
//! high-precision complex embeddings.

mod approx;
mod bigfloat;
mod cyclo;
mod expr;
mod field;

pub use approx::{
    common_denominator, cyclo_embed, cyclo_embed_pair, cyclo_recognize, default_denom_bound,
    embed_with, rationalize, sqrt3, ComplexApprox, CycloApprox, Embedding, DEFAULT_PRECISION,
};
pub use bigfloat::BigFloat;
pub use cyclo::CycloElem;
pub use expr::{parse_cyclo, Expr, Pos};
pub use field::{Field, FieldTag};

/// Exact rational numbers with canonical sign and reduced form.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from small integers.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
