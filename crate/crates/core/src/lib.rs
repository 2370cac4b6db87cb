//! Crossings and nestings of set partitions.
//!
//! The crate enumerates set partitions, walks the partition tree obtained by
//! inserting a new smallest element, propagates crossing/nesting
//! distributions through sequence operators, encodes partitions as Charlier
//! diagrams, counts the crossing- and nesting-similarity classes, and builds
//! the bivariate generating functions `S_π(q, p, z)`.
//!
//! Exact arithmetic is generic over [`scalar::Coefficient`]; the aliases
//! below fix the common choices.

pub mod charlier;
pub mod error;
pub mod genfun;
pub mod group_seq;
pub mod multiset;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod similarity;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use partition::SetPartition;

/// Polynomials in `q, p` over machine integers.
pub type Poly = poly::BivarPoly<i64>;
/// Polynomials in `q, p` over arbitrary-precision integers.
pub type BigPoly = poly::BivarPoly<num_bigint::BigInt>;
/// Polynomials in `q, p` over the rationals.
pub type RatPoly = poly::BivarPoly<num_rational::BigRational>;
/// Truncated series in `z` with [`Poly`] coefficients.
pub type Series = series::ZSeries<i64>;
/// Truncated series in `z` with [`BigPoly`] coefficients.
pub type BigSeries = series::ZSeries<num_bigint::BigInt>;
/// Truncated series in `z` with [`RatPoly`] coefficients.
pub type RatSeries = series::ZSeries<num_rational::BigRational>;
