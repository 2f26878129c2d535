//! Local models of Fourier coefficients of degenerate principal-series
//! sections, one module per kind of place, plus the assembly of the
//! unramified local polynomials into global divisor sums.
//!
//! Everything is exact: archimedean values are symbolic products of a
//! rational and tagged transcendental units, non-archimedean values are
//! polynomials, rationals, or cyclotomic numbers, and the complex parameter
//! only ever appears as a formal linear form in exponents.

mod arch;
mod datum;
mod padic_section;
mod ramified;
mod unramified;

pub use arch::{arch_coeff, SymbolicArchValue};
pub use datum::LocalModel;
pub use padic_section::{c_n, phi_xi, CnValue};
pub use ramified::{ramified_coeff, RamifiedShape, RamifiedValue};
pub use unramified::{
    density_oracle_rank1, euler_assembly, factorize, kudla_sweet_rank1_check, siegel_series_rank1,
    DensityCount,
};

/// Errors from the local coefficient models.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SiegelError {
    #[error("weight {kappa} is below the matrix size {n}")]
    WeightTooSmall { kappa: i64, n: usize },
    #[error("counting depth {depth} must exceed the valuation {a}")]
    DepthTooShallow { depth: u32, a: u32 },
    #[error("expected a square matrix of size {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("index {n} shares a factor with the level {np}")]
    LevelSharesFactor { n: u64, np: u64 },
    #[error("expected {expected} characters, got {got}")]
    CharacterCountMismatch { expected: usize, got: usize },
    #[error("character modulus {modulus} is not a power of {p}")]
    BadCharacterModulus { modulus: u32, p: u64 },
}
