//! Exact computational toolkit for Iwahori-Hecke algebras of the symmetric
//! group and their tensor realizations: seminormal representations, primitive
//! idempotents by Jucys-Murphy recurrence and by sequential fusion, finite
//! and spectral R-matrix identities, and truncated q-character series.
//!
//! All arithmetic is exact over the field of rational functions in q; every
//! verification in the suite module is an identity check, never a numerical
//! approximation.

pub mod error;
pub mod hecke;
pub mod matrix;
pub mod qchar;
pub mod ratfunc;
pub mod rmatrix;
pub mod seminormal;
pub mod suites;
pub mod young;

pub use error::{Error, Result};
