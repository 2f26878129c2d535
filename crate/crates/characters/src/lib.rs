//! Dirichlet characters with exact cyclotomic values.
//!
//! A character mod `N` is stored as a full table of exponents over the unit
//! group: `chi(a) = zeta^{e(a)}` where `zeta` is the primitive `ord(chi)`-th
//! root of unity of [`core_arith::CyclotomicElement`]. Everything downstream
//! of the table — conductors, Gauss sums, generalized Bernoulli numbers,
//! L-values at non-positive integers — is computed exactly in the cyclotomic
//! field, never through complex approximations.
//!
//! The unit group `(Z/N)^x` is presented by a canonical generator set (one
//! primitive root per odd prime power, the usual two generators for powers
//! of two), so characters can be described compactly by their images on
//! those generators and reconstructed deterministically.

pub mod bernoulli;
pub mod character;
pub mod gauss;
pub mod teichmuller;

pub use bernoulli::{generalized_bernoulli, l_value_nonpositive};
pub use character::{make_character, unit_generators, CharError, DirichletCharacter};
pub use gauss::{epsilon_pair_check, gauss_sum, GaussSum};
pub use teichmuller::teichmuller;
