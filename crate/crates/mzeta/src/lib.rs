//! Evaluation of Euler–Zagier multiple zeta-functions on their meromorphic
//! continuations, together with root-finding on one-complex-dimensional slices
//! of the double zeta-function's zero-set, predictor–corrector tracing of zero
//! curves, and numerical verification suites.
//!
//! The crate is organized in layers:
//!
//! * [`special`] — scalar special functions: Bernoulli numbers, Pochhammer
//!   symbols, complex Gamma, the Riemann zeta-function and its derivative via
//!   Euler–Maclaurin summation, and the order-`l` tail remainder `phi_tail`.
//! * [`multizeta`] — the double zeta-function on its full continuation, direct
//!   nested series for `r ≤ 3`, the triple zeta-function by Mellin–Barnes
//!   contour integration, the limit function `F`, and identity residuals.
//! * [`zerofinder`] — Newton root-finding on slices, winding-number zero
//!   counts, diagonal zero scans, and the touch-down / balance equations.
//! * [`tracer`] — continuation of zero curves in slice parameters with
//!   terminal classification (touch-down vs escape).
//! * [`verify`] — the named residual/theorem check suites used by the CLI.
//! * [`cli`] / [`io`] — command implementations, CSV/JSON/SVG emission.

pub mod cli;
pub mod error;
pub mod io;
pub mod multizeta;
pub mod params;
pub mod special;
pub mod tracer;
pub mod verify;
pub mod zerofinder;

pub use error::Error;
pub use params::{Complex, EvalParams};

/// Convenience result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
