//! Sparse multivariate polynomials and normalized rational functions over
//! Q or Q(ζ₁₂).

mod gcd;
mod monomial;
mod polynomial;
mod ratfunc;
mod text;
pub mod univariate;

pub use gcd::{content_in, poly_gcd, resultant, resultant_by_name, squarefree};
pub use monomial::{Monomial, VarSet, MAX_VARS};
pub use polynomial::{CycloPoly, Poly, QPoly};
pub use ratfunc::{CycloRatFunc, QRatFunc, RatFunc};
pub use text::{parse_poly, parse_poly_at, render};
