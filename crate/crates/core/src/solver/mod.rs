//! Exact solving of zero-dimensional parameter systems over Q(ζ₁₂):
//! lex Gröbner basis, triangular back-substitution, numeric root isolation,
//! algebraic recognition and exact certification.

mod groebner;
mod roots;
mod solve;

use num_bigint::BigInt;

pub use groebner::{groebner_lex, is_zero_dimensional, lex_leading_monomial, lex_normal_form};
pub use roots::{roots_dense, roots_in_cyclo, RootsOutcome};
pub use solve::{
    elimination_order, quick_infeasibility, rational_assignment, solve_system, verify_assignment, Assignment,
    PolySystem, SolveOutcome,
};

use crate::ring::{default_denom_bound, DEFAULT_PRECISION};

/// Numeric settings of root isolation. Soundness never depends on them:
/// every reported root is certified exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Starting precision in bits.
    pub precision: u32,
    /// Precision is doubled up to this bound before roots are declared outside the field.
    pub max_precision: u32,
    pub denom_bound: BigInt,
    /// Test hook: shifts every recognized candidate before certification, so
    /// that certification rejects it.
    pub perturb_candidates: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            precision: DEFAULT_PRECISION,
            max_precision: 4096,
            denom_bound: default_denom_bound(),
            perturb_candidates: false,
        }
    }
}

impl SolverConfig {
    /// A single low-precision pass with no precision doubling.
    pub fn starved(bits: u32) -> Self {
        Self { precision: bits, max_precision: bits, ..Self::default() }
    }
}
