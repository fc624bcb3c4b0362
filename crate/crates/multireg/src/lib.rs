//! Multigraded Hilbert functions and regularity regions of fat point schemes
//! in products of projective spaces P^{n_1} x ... x P^{n_k}.
//!
//! The library computes, over exact arithmetic:
//! * graded-piece dimensions and monomial bases of the N^k-graded coordinate ring,
//! * multigraded Hilbert functions of fat point schemes via ranks of
//!   interpolation (derivative-condition) matrices,
//! * the multigraded regularity region reg_B(Z) as an up-set of N^k,
//! * the resolution regularity vector via factor projections, and
//! * the closed-form bound regions that can be read off from the multiplicities.

pub mod hilbert;
pub mod linalg;
pub mod points;
pub mod regularity;
pub mod ring;
pub mod schemefile;
#[cfg(test)]
pub(crate) mod testutil;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix mixes entries from different fields")]
    MixedField,
    #[error("matrix entry count {found} does not match {rows} x {cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("multidegree has a negative coordinate: {0:?}")]
    NegativeDegree(Vec<i64>),
    #[error("multidegree length {found} does not match ambient k = {expected}")]
    DegreeLength { expected: usize, found: usize },
    #[error("space shape must have k >= 1 factors, each of dimension >= 1")]
    InvalidShape,
    #[error("point has a zero coordinate vector in factor {0}")]
    ZeroFactor(usize),
    #[error("point has {found} factor vectors, shape expects {expected}")]
    FactorCount { expected: usize, found: usize },
    #[error("factor {factor} coordinate vector has length {found}, expected {expected}")]
    FactorLength {
        factor: usize,
        expected: usize,
        found: usize,
    },
    #[error("scheme must contain at least one point")]
    EmptyScheme,
    #[error("scheme contains duplicate points")]
    DuplicatePoint,
    #[error("multiplicity must be >= 1")]
    ZeroMultiplicity,
    #[error("axis {axis} out of range for k = {k}")]
    AxisOutOfRange { axis: usize, k: usize },
    #[error("operation requires a reduced scheme (all multiplicities 1)")]
    NonReduced,
    #[error("operation only supported for shape {expected}, got {found}")]
    UnsupportedShape {
        expected: &'static str,
        found: String,
    },
    #[error("prime field modulus must be a prime > 2^30, got {0}")]
    BadModulus(u64),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("invalid scheme file: {0}")]
    SchemeFile(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
