//! Minimal ring and field abstractions for the generic containers.
//!
//! Two levels are provided:
//!
//! - [`Ring`]: commutative rings whose zero and one can be produced without
//!   context (`Rational`, Gaussian numbers, sparse polynomials). Generic
//!   matrices require this.
//! - [`ContextRing`]: rings whose elements carry their own context (a p-adic
//!   integer knows its prime and precision; a cyclotomic number knows its
//!   level), so zero and one can only be derived *from an existing element*.
//!   Univariate polynomials require only this weaker interface. Every `Ring`
//!   is a `ContextRing` via a blanket implementation.

use std::fmt::Debug;

/// A commutative ring with context-free constants.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// `self^e` by repeated squaring. `x^0 = 1` for every `x`, including 0.
    fn pow_u(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut e = e;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Embeds a small integer (binary doubling, O(log n) ring operations).
    fn from_i64(n: i64) -> Self {
        let mut mag = n.unsigned_abs();
        let mut acc = Self::zero();
        let mut base = Self::one();
        while mag > 0 {
            if mag & 1 == 1 {
                acc = acc.add(&base);
            }
            mag >>= 1;
            if mag > 0 {
                base = base.add(&base);
            }
        }
        if n < 0 {
            acc.neg()
        } else {
            acc
        }
    }
}

/// A commutative ring whose constants are derived from an existing element.
pub trait ContextRing: Clone + PartialEq + Debug {
    /// The zero of the ring `self` belongs to.
    fn zero_like(&self) -> Self;
    /// The one of the ring `self` belongs to.
    fn one_like(&self) -> Self;
    fn ctx_add(&self, rhs: &Self) -> Self;
    fn ctx_neg(&self) -> Self;
    fn ctx_mul(&self, rhs: &Self) -> Self;
    fn ctx_is_zero(&self) -> bool;

    fn ctx_sub(&self, rhs: &Self) -> Self {
        self.ctx_add(&rhs.ctx_neg())
    }

    /// Embeds a small integer into the ring `self` belongs to.
    fn ctx_from_i64(&self, n: i64) -> Self {
        let mut mag = n.unsigned_abs();
        let mut acc = self.zero_like();
        let mut base = self.one_like();
        while mag > 0 {
            if mag & 1 == 1 {
                acc = acc.ctx_add(&base);
            }
            mag >>= 1;
            if mag > 0 {
                base = base.ctx_add(&base);
            }
        }
        if n < 0 {
            acc.ctx_neg()
        } else {
            acc
        }
    }
}

impl<T: Ring> ContextRing for T {
    fn zero_like(&self) -> Self {
        T::zero()
    }
    fn one_like(&self) -> Self {
        T::one()
    }
    fn ctx_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn ctx_neg(&self) -> Self {
        self.neg()
    }
    fn ctx_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn ctx_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ctx_from_i64(&self, n: i64) -> Self {
        T::from_i64(n)
    }
}

/// A `Ring` in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}
