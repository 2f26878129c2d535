//! Exact arithmetic kernel shared by every verification crate in this
//! workspace.
//!
//! Everything here is exact: no floats, no intervals, no rounding. The kernel
//! provides
//!
//! - [`Rational`]: arbitrary-precision fractions in lowest terms with a
//!   canonical `"num/den"` string form,
//! - [`PadicInt`]: truncated p-adic integers mod `p^M` with explicit,
//!   per-value precision tracking and a total valuation report,
//! - [`UniPoly`]: dense univariate polynomials over any coefficient ring,
//!   including truncated power-series helpers (products, exact division by
//!   monic divisors, series inversion, resultants),
//! - [`CyclotomicElement`]: elements of the cyclotomic field generated by a
//!   primitive N-th root of unity, stored reduced modulo the N-th cyclotomic
//!   polynomial,
//! - [`MPoly`]: sparse multivariate polynomials keyed by exponent vectors,
//! - [`Matrix`]: dense generic matrices with determinants, adjugates, block
//!   assembly and inverses over fields.
//!
//! All values are immutable after construction; operations return new values
//! and are safe to run concurrently over independent inputs.

pub mod cyclotomic;
pub mod matrix;
pub mod mpoly;
pub mod padic;
pub mod rational;
pub mod ring;
pub mod unipoly;

pub use cyclotomic::{cyclotomic_polynomial, cyclotomic_reduce, euler_phi, CyclotomicElement};
pub use matrix::{Conjugate, Matrix};
pub use mpoly::MPoly;
pub use padic::{padic_binomial, padic_log_unit, PadicError, PadicInt, Valuation};
pub use rational::{rational_arith, ArithError, RationalOp};
pub use ring::{ContextRing, Field, Ring};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = rational::Rational;
