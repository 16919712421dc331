//! Exact arithmetic: two-variable Laurent polynomials, one-variable Laurent
//! polynomials, the cyclotomic ring `Z[xi_N]`, and quantum numbers.

mod cyclotomic;
pub(crate) mod laurent;
mod quantum;
mod univariate;

pub use cyclotomic::{cyclotomic_poly, CycLaurent, CycScalar};
pub use laurent::{TwoVarLaurent, Variable, Vars};
pub use quantum::{qbinom, qfact, qint, yfact};
pub use univariate::OneVarLaurent;
