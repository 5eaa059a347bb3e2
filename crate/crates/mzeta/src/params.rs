use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The universal scalar: a pair of IEEE double-precision reals.
pub type Complex = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Rejects non-finite components at API boundaries.
pub fn require_finite(s: Complex, what: &str) -> Result<Complex, Error> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(s)
    } else {
        Err(Error::Range(format!("{what} must be finite, got {s}")))
    }
}

/// Accuracy and truncation policy for every evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalParams {
    /// Absolute accuracy goal.
    pub target_eps: f64,
    /// Euler–Maclaurin order `l`.
    pub em_order_l: u32,
    /// Hard cap on series truncation lengths.
    pub max_trunc: u64,
    /// Exclusion distance from singular sets.
    pub pole_radius: f64,
}

impl Default for EvalParams {
    fn default() -> Self {
        EvalParams {
            target_eps: 1e-10,
            em_order_l: 10,
            max_trunc: 1_000_000,
            pole_radius: 1e-6,
        }
    }
}

impl EvalParams {
    /// Validates the invariants; call at API boundaries (CLI/config).
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.target_eps > 0.0 && self.target_eps.is_finite()) {
            return Err(Error::Range(format!(
                "target_eps must be positive, got {}",
                self.target_eps
            )));
        }
        if self.em_order_l < 1 {
            return Err(Error::Range("em_order_l must be >= 1".into()));
        }
        if self.max_trunc < 10 {
            return Err(Error::Range("max_trunc must be >= 10".into()));
        }
        if !(self.pole_radius > 0.0 && self.pole_radius.is_finite()) {
            return Err(Error::Range(format!(
                "pole_radius must be positive, got {}",
                self.pole_radius
            )));
        }
        Ok(())
    }

    /// Same policy with a tighter accuracy goal.
    pub fn with_eps(mut self, eps: f64) -> Self {
        self.target_eps = eps;
        self
    }

    /// Same policy with a different Euler–Maclaurin order.
    pub fn with_order(mut self, l: u32) -> Self {
        self.em_order_l = l;
        self
    }
}
