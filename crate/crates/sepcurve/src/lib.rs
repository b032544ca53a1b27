//! Exact analyzer for separated-variable curves `P(X) - Q(Y) = 0`.
//!
//! Given polynomials P, Q over Q, this crate decides when every
//! function-field solution pair (f, g) with `P(f) = Q(g)` has effectively
//! bounded height or must be constant, classifies the genus-0 equal-degree
//! case completely, and verifies the underlying height identities on
//! explicitly constructed solutions over Q(t).
//!
//! Module map:
//! - [`ratpoly`]: exact rational scalars and univariate polynomial algebra.
//! - [`critical`]: critical structure of a polynomial (multiplicity classes
//!   of P', critical-value polynomials, matched/unmatched bookkeeping).
//! - [`criteria`]: the height-bound criteria and the genus-0 classifier.
//! - [`funcfield`]: the Q(t) harness (valuations, heights, identity checks,
//!   witnesses, solution generators).
//! - [`oracle`]: test-only numeric cross-validation via high-precision
//!   simultaneous root finding.
//! - [`cli`]: expression parsing and JSON input/report documents backing the
//!   `sepcurve` binary.

pub mod cli;
pub mod critical;
pub mod criteria;
pub mod error;
pub mod funcfield;
pub mod oracle;
pub mod ratpoly;

pub use error::{Error, Result};
pub use ratpoly::{Polynomial, Rat};
