//! Exact computation of coloured Jones polynomials and coloured Alexander
//! (ADO) invariants of knots presented as braid closures.
//!
//! Both invariants are read off one two-variable Laurent polynomial, the
//! unified pairing, computed from the braid action on a weight space of the
//! generic Verma module. Specialising `(x, d)` at generic `q` gives the
//! coloured Jones polynomial, at a root of unity the ADO invariant.
//!
//! ```
//! use qknot_core::{BraidWord, coloured_jones};
//!
//! let trefoil = BraidWord::parse("1 1 1", 2).unwrap();
//! let j2 = coloured_jones(&trefoil, 2, false).unwrap();
//! assert_eq!(j2.to_string(), "q^-2 + q^-6 - q^-8");
//! ```

pub mod braid;
pub mod error;
pub mod oracles;
pub mod pairing;
pub mod report;
pub mod rings;
pub mod special;
pub mod table;
pub mod verify;
pub mod verma;

pub use braid::{BraidWord, MarkovMove};
pub use error::{Error, Result};
pub use pairing::{
    ado, ado_zn_route, coloured_jones, unified_pairing, KnotInvariants, UnifiedPairing,
};
pub use report::{InvariantKind, InvariantReport};
pub use rings::{CycLaurent, CycScalar, OneVarLaurent, TwoVarLaurent, Variable, Vars};
