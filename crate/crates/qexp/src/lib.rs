//! Truncated q-expansions over exact coefficient rings, the divisor-sum
//! coefficient family with its weight-shift functional equation, Kummer
//! congruences between weights, and one-variable p-adic interpolation of the
//! family along a fixed branch.
//!
//! Everything here is exact: coefficients live in the rational field or in
//! fixed-precision p-adic integers, truncation orders are explicit, and
//! every check reports the exact range it covered.

mod eisenstein;
mod measure;
mod series;

pub use eisenstein::{
    divisors, eisenstein_coeff, eisenstein_family, functional_equation_check, kummer_check,
    FeDiscrepancy, FeReport,
};
pub use measure::{measure_from_family, IwasawaPoly};
pub use series::{delta, series_mul, u_p, v_p, QExpError, QExpansion, RingTag};
