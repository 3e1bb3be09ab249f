//! Tolerance policy for the floating-point backend.
//!
//! Exact scalars ignore all of these.

use serde::{Deserialize, Serialize};

/// Absolute bound on matrix-norm residuals.
pub const DEFAULT_MATRIX_ABS: f64 = 1e-10;
/// Relative bound on scalar comparisons.
pub const DEFAULT_SCALAR_REL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub matrix_abs: f64,
    pub scalar_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            matrix_abs: DEFAULT_MATRIX_ABS,
            scalar_rel: DEFAULT_SCALAR_REL,
        }
    }
}

impl Tolerance {
    /// Same bound for both matrix residuals and scalar comparisons.
    pub fn uniform(tol: f64) -> Self {
        Self {
            matrix_abs: tol,
            scalar_rel: tol,
        }
    }
}
