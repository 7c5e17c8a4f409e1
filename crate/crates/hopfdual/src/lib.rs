//! Exact construction and machine verification of the affine prime regular
//! Hopf algebras of GK-dimension one, their finite duals, and the Hopf
//! pairings between them, over cyclotomic-rational coefficient fields.
//!
//! The crate is organized around the pipeline
//! `scalar -> matrix -> hopf -> families -> dual -> presented -> pairing`;
//! every identity checked by the suites is decided by exact field
//! arithmetic, never numerically.

pub mod dual;
pub mod families;
pub mod hopf;
pub mod lemmas;
pub mod matrix;
pub mod pairing;
pub mod presented;
pub mod report;
pub mod scalar;

pub mod suites;

pub use scalar::{CycloContext, CycloScalar, Rational, ScalarError};
