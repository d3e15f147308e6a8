//! Exact computer algebra for globally periodic fractional-linear recursions
//! of orders two and three.
//!
//! The crate is organised bottom-up:
//!
//! - [`ring`]: rationals, the cyclotomic field Q(ζ₁₂), high-precision complex
//!   embeddings and algebraic recognition.
//! - [`poly`]: sparse multivariate polynomials and normalized rational functions.
//! - [`recursion`]: recursion kinds, affine conjugation, symbolic orbits and
//!   the meeting-condition systems.
//! - [`solver`]: Gröbner bases, root extraction in Q(ζ₁₂) and exact solving.
//! - [`verify`]: symbolic and numeric periodicity certificates.

pub mod error;
pub mod poly;
pub mod recursion;
pub mod ring;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
