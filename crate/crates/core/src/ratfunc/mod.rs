//! Exact arithmetic: Laurent polynomials in q over the rationals, the
//! rational-function field they generate (with a unique reduced
//! representation, so equality is decidable and structural), and rational
//! functions of one auxiliary variable t over that field for spectral
//! parameters and removable-singularity limits.

mod ext;
mod fraction;
mod laurent;
mod parse;

pub use ext::{ExtRatFunc, Poly};
pub use fraction::{qfact, qint, RatFunc};
pub use laurent::LaurentPoly;
pub use parse::parse_ratfunc;
