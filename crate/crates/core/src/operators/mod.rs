//! Operators on truncated multivariable power series.

pub mod derivation;
pub mod expansions;
pub mod identities;
pub mod ops;
pub mod truncated;

pub use truncated::{build_series, TruncatedSeries};
