//! Lauricella multivariable hypergeometric functions.
//!
//! * [`series`]: direct evaluation of the Gauss, Appell F2 and Lauricella
//!   F_A, F_B, F_C, F_D series, shell by shell in total degree, with
//!   convergence-region checks and tail estimates.
//! * [`operators`]: the symbolic operators `δ_j`, `(δ+α)_n`, `(-δ)_n`, `∇`,
//!   `Δ`, `H` and `H̄` acting exactly on truncated power series, and the
//!   catalog of operational representations checked coefficient by
//!   coefficient.
//! * [`registry`]: decomposition formulas as pairs of independent
//!   evaluation paths, with seeded sampling and misprint detection.
//! * [`quadrature`]: tensor Gauss-Jacobi rules for Euler-type integral
//!   representations.
//! * [`harness`]: verification runs and machine-readable reports.
//!
//! Coefficient algebra is generic over [`Scalar`] (`f32`, `f64`,
//! [`BigRational`]); floating-point evaluation is generic over [`Real`].

// Comparisons are written `!(x > 0)` on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod expr;
pub mod harness;
pub mod operators;
pub mod quadrature;
pub mod registry;
pub mod sampling;
pub mod scalar;
pub mod series;
pub mod template;

pub use error::{Error, Result};
pub use expr::{Affine, Binding};
pub use num_rational::BigRational;
pub use operators::TruncatedSeries;
pub use scalar::{Real, Scalar};
pub use series::{EvalOptions, EvalResult, Family, LauricellaParams, MultiIndex};

/// Double-precision parameters.
pub type Params = LauricellaParams<f64>;
/// Exact rational parameters.
pub type ExactParams = LauricellaParams<BigRational>;
/// Double-precision truncated series.
pub type Series = TruncatedSeries<f64>;
/// Exact rational truncated series.
pub type ExactSeries = TruncatedSeries<BigRational>;
