use thiserror::Error;

use crate::params::Complex;

/// Error type shared by all evaluation and root-finding layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the supported range of an operation.
    #[error("argument out of range: {0}")]
    Range(String),

    /// Evaluation point within the exclusion radius of a singular set.
    #[error("point ({}, {}) within {radius:e} of a singularity", at.re, at.im)]
    PoleProximity { at: Complex, radius: f64 },

    /// The truncation budget cannot deliver the requested accuracy.
    #[error("target accuracy unreachable within the truncation budget")]
    AccuracyUnreachable,

    /// The Euler–Maclaurin order is too low for convergence in this region.
    #[error("Euler-Maclaurin order too low for this evaluation region")]
    InsufficientOrder,

    /// Direct-series evaluation requested outside absolute convergence.
    #[error("outside the region of absolute convergence")]
    NotInConvergentRegion,

    /// Contour quadrature refinement failed to settle.
    #[error("contour quadrature did not converge")]
    QuadratureNotConverged,

    /// Newton (or bisection) iteration exhausted its budget.
    #[error("iteration did not converge")]
    NoConvergence,

    /// A trace was seeded with a point that is not a zero on its slice.
    #[error("seed does not lie on the requested slice")]
    SeedNotOnSlice,

    /// A zero or pole sits too close to a winding-count boundary.
    #[error("zero or pole too close to the counting boundary")]
    BoundaryTooClose,

    /// Bisection bracket never changes sign.
    #[error("no sign change in the bracketing interval")]
    NoSignChange,

    /// Malformed input (complex literal, CSV row, config file).
    #[error("parse error: {0}")]
    Parse(String),

    /// Filesystem failure while writing command output.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
