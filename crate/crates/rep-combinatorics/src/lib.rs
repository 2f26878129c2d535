//! Combinatorics of polynomial representations of general linear groups:
//! partitions and Weyl dimension counts, the multiplicity-free plethysm of
//! a degree under a product of two groups, the one-row tensor (Pieri)
//! rule with a Schur-polynomial oracle, and exact block-degree and
//! highest-weight verification for determinant polynomials on a four-block
//! matrix of indeterminates.

pub mod blockpoly;
pub mod partition;
pub mod schur;

pub use blockpoly::{block_degree_property_check, BlockDegrees, BlockPolynomial};
pub use partition::{
    binomial, cauchy_decompose, cauchy_dimension_check, pieri, weyl_dim, Partition,
};
pub use schur::schur_polynomial;

use thiserror::Error;

/// Errors from shape and size validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    /// A partition has more nonzero parts than the group has rows.
    #[error("partition has {length} parts but the group only has {n}")]
    LengthOverflow { length: usize, n: usize },
    /// Block or group shapes are inconsistent.
    #[error("bad shape: {0}")]
    BadShape(String),
    /// Expanding the determinant of a matrix this large is refused.
    #[error("matrix size {size} exceeds the expansion limit {max}")]
    SizeTooLarge { size: usize, max: usize },
    /// A minor exponent list violates its required monotonicity.
    #[error("invalid exponents: {0}")]
    NegativeExponent(String),
}
