//! Independent small-scale invariants used to cross-check the engine.
//! Nothing here touches the weight-space representation.

mod burau;
mod kauffman;

pub use burau::{burau_alexander, reduced_burau_generator};
pub use kauffman::{kauffman_bracket, kauffman_jones};

/// Upper bound on crossings for the `2^c` bracket state sum.
pub const MAX_STATE_SUM_CROSSINGS: usize = 16;
