//! Arbitrary-precision rational numbers.
//!
//! [`Rational`] wraps `num_rational::BigRational` and pins down
//!
//! - the canonical form: lowest terms, denominator strictly positive
//!   (maintained by the wrapped type and re-checked in debug builds),
//! - the canonical string form used by all JSON interfaces: `"num"` when the
//!   denominator is 1, otherwise `"num/den"`,
//! - integer powers with negative exponents (exact, erroring only on `0^-k`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::ring::{Field, Ring};

/// Errors from exact rational arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,
    #[error("malformed rational literal: {0:?}")]
    BadLiteral(String),
}

/// An exact fraction in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den` from machine integers; panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The numerator, provided the value is an integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact integer power, including negative exponents.
    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if self.is_zero() && e < 0 {
            return Err(ArithError::ZeroToNegativePower);
        }
        if e == 0 {
            return Ok(Rational::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Rational::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// The exact power of `p` dividing the value: `v` with
    /// `self = p^v · (unit at p)`. Zero has no finite valuation (`None`).
    pub fn valuation(&self, p: u64) -> Option<i64> {
        assert!(p >= 2, "valuation needs p >= 2");
        if self.is_zero() {
            return None;
        }
        let p = BigUint::from(p);
        Some(padic_val(self.numer().magnitude(), &p) - padic_val(self.denom().magnitude(), &p))
    }
}

fn padic_val(n: &BigUint, p: &BigUint) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut n = n.clone();
    loop {
        let (q, r) = num_integer::div_rem(n, p.clone());
        if !r.is_zero() {
            return v;
        }
        v += 1;
        n = q;
    }
}

/// The four field operations, for callers that select operations by tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic dispatch; division by zero is a distinct error value,
/// never a panic.
pub fn rational_arith(a: &Rational, b: &Rational, op: RationalOp) -> Result<Rational, ArithError> {
    match op {
        RationalOp::Add => Ok(a + b),
        RationalOp::Sub => Ok(a - b),
        RationalOp::Mul => Ok(a * b),
        RationalOp::Div => a.checked_div(b),
    }
}

macro_rules! binop {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $fn(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $fn(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero; use [`Rational::checked_div`] to get an
    /// error value instead.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        Rational::inv(self).ok()
    }
}

impl fmt::Display for Rational {
    /// Canonical form: `"num"` for integers, `"num/den"` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_assert!(self.denom().sign() == Sign::Plus, "canonical form violated");
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, ArithError> {
        let bad = || ArithError::BadLiteral(s.to_owned());
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_bigint(n))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ArithError::DivisionByZero);
                }
                Rational::new(n, d)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn sum_of_halves_and_thirds() {
        assert_eq!(rational_arith(&q(1, 2), &q(1, 3), RationalOp::Add).unwrap(), q(5, 6));
    }

    #[test]
    fn normalization_under_product_with_one() {
        assert_eq!(rational_arith(&q(2, 4), &Rational::one(), RationalOp::Mul).unwrap(), q(1, 2));
    }

    #[test]
    fn self_division_is_one() {
        assert_eq!(rational_arith(&q(7, 3), &q(7, 3), RationalOp::Div).unwrap(), Rational::one());
    }

    #[test]
    fn division_by_zero_is_an_error_value() {
        assert_eq!(
            rational_arith(&q(1, 2), &Rational::zero(), RationalOp::Div),
            Err(ArithError::DivisionByZero)
        );
    }

    #[test]
    fn negative_powers_are_exact() {
        assert_eq!(q(2, 3).pow(-2).unwrap(), q(9, 4));
        assert_eq!(Rational::zero().pow(-1), Err(ArithError::ZeroToNegativePower));
        assert_eq!(Rational::zero().pow(0).unwrap(), Rational::one());
    }

    #[test]
    fn valuation_splits_numerator_and_denominator() {
        assert_eq!(q(12, 5).valuation(2), Some(2));
        assert_eq!(q(5, 8).valuation(2), Some(-3));
        assert_eq!(Rational::zero().valuation(2), None);
    }

    #[test]
    fn string_round_trip() {
        for s in ["5/6", "-7/3", "42", "0", "-1/2"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        // Non-canonical input parses to canonical form.
        let r: Rational = "6/-4".parse().unwrap();
        assert_eq!(r.to_string(), "-3/2");
    }

    #[test]
    fn serde_uses_canonical_strings() {
        let j = serde_json::to_string(&q(-3, 7)).unwrap();
        assert_eq!(j, "\"-3/7\"");
        let back: Rational = serde_json::from_str(&j).unwrap();
        assert_eq!(back, q(-3, 7));
    }
}
