//! Orbit-type strata, trace invariants and the radical-ideal machinery for
//! SU(2) lattice gauge models reduced to SU(2)^N and SL(2,C)^N.
//!
//! Scalars come in an exact Gaussian-rational backend and a `Complex64`
//! backend behind [`scalar::Scalar`]; the symbolic trace-polynomial code in
//! [`tracepoly`] is exact throughout.

pub mod error;
pub mod invariants;
pub mod json;
pub mod lattice;
pub mod lie;
pub mod matrix;
pub mod sampling;
pub mod scalar;
pub mod strata;
pub mod tolerance;
pub mod tracepoly;

pub use error::{Error, Result};
