//! Fractional-linear recursions of orders 2 and 3: reduced families, general
//! forms and affine conjugation, symbolic orbits and periodicity conditions.

mod conditions;
mod general;
mod kind;
mod orbit;

pub use conditions::{
    build_condition_system, build_with_meeting, canonical_generators, meeting_indices, ConditionSystem,
};
pub use general::{AffineMap, GeneralSpec};
pub(crate) use kind::Slot;
pub(crate) use orbit::orbit_prefix;
pub use kind::{RecursionKind, RecursionSpec};
pub use orbit::{
    forward_step, initial_state, inverse_step, orbit_symbolic, Direction, MapPolys, RecursionMap, ScalarMap,
};
