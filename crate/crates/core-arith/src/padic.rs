//! Truncated p-adic integers with explicit precision tracking.
//!
//! A [`PadicInt`] is a residue mod `p^M` together with the pair `(p, M)`.
//! The model is capped absolute precision: every value states up front how
//! many digits it knows, binary operations require equal `p` and return the
//! minimum of the two precisions, and operations that genuinely lose digits
//! (exact division by `p^k`, binomial coefficients) return values with a
//! smaller `M` rather than pretending to know more than they do.
//!
//! The valuation of a value whose known digits are all zero is reported as
//! "at least M" ([`Valuation::AtLeast`]), never as infinity, so valuation
//! comparisons stay total.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;
use crate::ring::ContextRing;

/// Errors from truncated p-adic arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("residue {0} is not invertible mod {1}^{2}")]
    NotAUnit(BigUint, u64, u32),
    #[error("known digits of {0} are not divisible by {1}^{2}")]
    NotDivisible(BigUint, u64, u32),
    #[error("operation needs {needed} digits of precision, only {have} available")]
    PrecisionExhausted { needed: u32, have: u32 },
    #[error("rational {0} has a denominator divisible by p={1}")]
    DenominatorNotCoprime(Rational, u64),
    #[error("the p-adic logarithm needs an odd prime, got p=2")]
    EvenPrime,
    #[error("the p-adic logarithm needs u = 1 mod p, got residue {0} mod {1}")]
    NotOneModP(BigUint, u64),
}

/// Valuation of a truncated value: exact when a nonzero digit is visible,
/// otherwise a lower bound at the precision cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Exact(u32),
    AtLeast(u32),
}

impl Valuation {
    /// The smallest valuation consistent with the report.
    pub fn lower_bound(self) -> u32 {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }

    pub fn is_at_least(self, k: u32) -> bool {
        self.lower_bound() >= k
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

/// A p-adic integer known mod `p^M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PadicInt {
    p: u64,
    prec: u32,
    residue: BigUint,
}

impl PadicInt {
    /// Reduces `residue` mod `p^prec`. Requires `p >= 2` and `prec >= 1`.
    pub fn new(p: u64, prec: u32, residue: BigUint) -> Self {
        assert!(p >= 2, "p-adic prime must be at least 2");
        assert!(prec >= 1, "precision must be at least 1");
        let m = pow_u(p, prec);
        PadicInt { p, prec, residue: residue % m }
    }

    pub fn zero(p: u64, prec: u32) -> Self {
        PadicInt::new(p, prec, BigUint::zero())
    }

    pub fn one(p: u64, prec: u32) -> Self {
        PadicInt::new(p, prec, BigUint::one())
    }

    /// Embeds a (possibly negative) integer.
    pub fn from_integer(p: u64, prec: u32, n: &BigInt) -> Self {
        let m = BigInt::from(pow_u(p, prec));
        let r = n.mod_floor(&m);
        PadicInt::new(p, prec, r.magnitude().clone())
    }

    pub fn from_i64(p: u64, prec: u32, n: i64) -> Self {
        PadicInt::from_integer(p, prec, &BigInt::from(n))
    }

    /// Embeds a rational with denominator prime to `p` (its p-adic valuation
    /// must be non-negative).
    pub fn from_rational(p: u64, prec: u32, q: &Rational) -> Result<Self, PadicError> {
        let den = q.denom().magnitude();
        if den.is_multiple_of(&BigUint::from(p)) {
            return Err(PadicError::DenominatorNotCoprime(q.clone(), p));
        }
        let num = PadicInt::from_integer(p, prec, q.numer());
        let den = PadicInt::from_integer(p, prec, &BigInt::from(den.clone()));
        Ok(&num * &den.unit_inverse().expect("denominator coprime to p is a unit"))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// The number of known digits `M` (value is a residue mod `p^M`).
    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    /// The modulus `p^M`.
    pub fn modulus(&self) -> BigUint {
        pow_u(self.p, self.prec)
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// Exact valuation when a nonzero digit is visible; `AtLeast(M)` when all
    /// known digits vanish.
    pub fn valuation(&self) -> Valuation {
        if self.residue.is_zero() {
            return Valuation::AtLeast(self.prec);
        }
        let p = BigUint::from(self.p);
        let mut v = 0u32;
        let mut r = self.residue.clone();
        loop {
            let (q, rem) = r.div_rem(&p);
            if !rem.is_zero() {
                return Valuation::Exact(v);
            }
            v += 1;
            r = q;
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.valuation(), Valuation::Exact(0))
    }

    /// Forgets digits beyond `new_prec` (never adds digits).
    pub fn reduce_precision(&self, new_prec: u32) -> Self {
        assert!(new_prec >= 1 && new_prec <= self.prec, "can only lower precision");
        PadicInt::new(self.p, new_prec, self.residue.clone())
    }

    /// True when both sides agree modulo `p^min(M1,M2)`.
    pub fn congruent(&self, other: &Self) -> bool {
        assert_eq!(self.p, other.p, "p mismatch");
        let prec = self.prec.min(other.prec);
        let m = pow_u(self.p, prec);
        (&self.residue % &m) == (&other.residue % &m)
    }

    /// Inverse of a unit mod `p^M`.
    pub fn unit_inverse(&self) -> Result<Self, PadicError> {
        let m = BigInt::from(self.modulus());
        let r = BigInt::from(self.residue.clone());
        let e = r.extended_gcd(&m);
        if !e.gcd.is_one() {
            return Err(PadicError::NotAUnit(self.residue.clone(), self.p, self.prec));
        }
        let inv = e.x.mod_floor(&m);
        Ok(PadicInt::new(self.p, self.prec, inv.magnitude().clone()))
    }

    /// `self^e` for a big exponent (used by root-of-unity constructions).
    pub fn pow_big(&self, e: &BigUint) -> Self {
        let m = self.modulus();
        PadicInt { p: self.p, prec: self.prec, residue: self.residue.modpow(e, &m) }
    }

    pub fn pow(&self, e: u64) -> Self {
        self.pow_big(&BigUint::from(e))
    }

    /// Exact division by `p^k`: requires the known digits to be divisible and
    /// returns a value with `k` fewer digits of precision.
    pub fn div_exact_p(&self, k: u32) -> Result<Self, PadicError> {
        if k == 0 {
            return Ok(self.clone());
        }
        if k >= self.prec {
            return Err(PadicError::PrecisionExhausted { needed: k + 1, have: self.prec });
        }
        let pk = pow_u(self.p, k);
        let (q, r) = self.residue.div_rem(&pk);
        if !r.is_zero() {
            return Err(PadicError::NotDivisible(self.residue.clone(), self.p, k));
        }
        Ok(PadicInt::new(self.p, self.prec - k, q))
    }

    /// Scales by an integer (no precision change).
    pub fn mul_int(&self, n: &BigInt) -> Self {
        let f = PadicInt::from_integer(self.p, self.prec, n);
        self * &f
    }

    /// Multiplies by `p^k`, *gaining* `k` digits of absolute precision:
    /// if `x` is known mod `p^M` then `p^k x` is known mod `p^{M+k}`.
    pub fn mul_p_power(&self, k: u32) -> Self {
        PadicInt::new(self.p, self.prec + k, &self.residue * pow_u(self.p, k))
    }
}

fn pow_u(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

fn binop_check(a: &PadicInt, b: &PadicInt) -> (u64, u32) {
    assert_eq!(a.p, b.p, "p-adic arithmetic across different primes");
    (a.p, a.prec.min(b.prec))
}

impl std::ops::Add for &PadicInt {
    type Output = PadicInt;
    fn add(self, rhs: &PadicInt) -> PadicInt {
        let (p, prec) = binop_check(self, rhs);
        PadicInt::new(p, prec, &self.residue + &rhs.residue)
    }
}

impl std::ops::Sub for &PadicInt {
    type Output = PadicInt;
    fn sub(self, rhs: &PadicInt) -> PadicInt {
        let (p, prec) = binop_check(self, rhs);
        let m = pow_u(p, prec);
        let a = &self.residue % &m;
        let b = &rhs.residue % &m;
        let r = if a >= b { a - b } else { &m + a - b };
        PadicInt::new(p, prec, r)
    }
}

impl std::ops::Mul for &PadicInt {
    type Output = PadicInt;
    fn mul(self, rhs: &PadicInt) -> PadicInt {
        let (p, prec) = binop_check(self, rhs);
        PadicInt::new(p, prec, &self.residue * &rhs.residue)
    }
}

impl std::ops::Neg for &PadicInt {
    type Output = PadicInt;
    fn neg(self) -> PadicInt {
        &PadicInt::zero(self.p, self.prec) - self
    }
}

impl ContextRing for PadicInt {
    fn zero_like(&self) -> Self {
        PadicInt::zero(self.p, self.prec)
    }
    fn one_like(&self) -> Self {
        PadicInt::one(self.p, self.prec)
    }
    fn ctx_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn ctx_neg(&self) -> Self {
        -self
    }
    fn ctx_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn ctx_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ctx_from_i64(&self, n: i64) -> Self {
        PadicInt::from_i64(self.p, self.prec, n)
    }
}

/// The p-adic logarithm on principal units, `log u = Σ_{k≥1} (-1)^{k+1}(u-1)^k/k`.
///
/// Requires `p` odd and `u = 1 mod p`. For such `u` the series output is
/// determined by the input residue at full precision: every term beyond the
/// first is known mod `p^M` because `(u-1)^k/k` has valuation at least
/// `k - log_p(k) > 0`, and the unknown tail of `u` only moves the result by
/// multiples of `p^M`. The returned value therefore has the same precision
/// `M` as the input; downstream divisions (e.g. by `log(1+p)`, valuation 1)
/// are where digits are genuinely lost.
pub fn padic_log_unit(u: &PadicInt) -> Result<PadicInt, PadicError> {
    if u.p == 2 {
        return Err(PadicError::EvenPrime);
    }
    let one = PadicInt::one(u.p, u.prec);
    let x = u - &one;
    let c = match x.valuation() {
        Valuation::AtLeast(_) => return Ok(PadicInt::zero(u.p, u.prec)),
        Valuation::Exact(0) => return Err(PadicError::NotOneModP(u.residue.clone(), u.p)),
        Valuation::Exact(v) => v,
    };
    // Series over exact integers: x is the exact residue representative.
    let xi = BigInt::from(x.residue.clone());
    let mut acc = PadicInt::zero(u.p, u.prec);
    let mut power = BigInt::one();
    let mut k = 1u32;
    loop {
        // Terms with k*c - floor(log_p k) >= M vanish mod p^M.
        let log_term = (k as f64).log(u.p as f64).floor() as u32;
        if k * c >= u.prec + log_term + 1 && k > 1 {
            break;
        }
        power *= &xi;
        let mut term = Rational::new(power.clone(), BigInt::from(k))
            .expect("k > 0");
        if k % 2 == 0 {
            term = -term;
        }
        let t = PadicInt::from_rational_with_val(u.p, u.prec, &term)?;
        acc = &acc + &t;
        k += 1;
        // Hard stop: valuation growth guarantees termination well below this.
        assert!(k < 64 * (u.prec + 2), "log series failed to terminate");
    }
    Ok(acc)
}

impl PadicInt {
    /// Embeds a rational with non-negative p-adic valuation (the denominator
    /// may contain p only if the numerator contains at least as many factors).
    fn from_rational_with_val(p: u64, prec: u32, q: &Rational) -> Result<Self, PadicError> {
        if q.is_zero() {
            return Ok(PadicInt::zero(p, prec));
        }
        let v = q.valuation(p).expect("nonzero");
        assert!(v >= 0, "rational is not p-adically integral");
        // Strip the p-part, invert the unit denominator, restore the p-part.
        let pv = BigInt::from(p).pow(v as u32);
        let reduced = q.checked_div(&Rational::from_bigint(pv.clone())).expect("p^v != 0");
        let num = PadicInt::from_integer(p, prec, reduced.numer());
        let den = PadicInt::from_integer(p, prec, reduced.denom());
        let unit = &num * &den.unit_inverse()?;
        Ok(unit.mul_int(&pv))
    }
}

/// Binomial coefficient `C(x, j) = x(x-1)···(x-j+1)/j!` of a p-adic integer.
///
/// The result is a genuine p-adic integer; dividing by `j!` costs
/// `v_p(j!)` digits of precision, which the returned value reports honestly.
pub fn padic_binomial(x: &PadicInt, j: u64) -> Result<PadicInt, PadicError> {
    if j == 0 {
        return Ok(PadicInt::one(x.p(), x.precision()));
    }
    let mut num = x.clone();
    for i in 1..j {
        num = &num * &(x - &PadicInt::from_i64(x.p(), x.precision(), i as i64));
    }
    // j! = p^v * unit
    let mut v = 0u32;
    let mut unit = BigUint::one();
    for i in 1..=j {
        let mut i = BigUint::from(i);
        let p = BigUint::from(x.p());
        while i.is_multiple_of(&p) {
            v += 1;
            i /= &p;
        }
        unit = (unit * i) % pow_u(x.p(), x.precision());
    }
    let dropped = num.div_exact_p(v)?;
    let unit_inv = PadicInt::new(x.p(), dropped.precision(), unit).unit_inverse()?;
    Ok(&dropped * &unit_inv)
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.residue, self.p, self.prec)
    }
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized form: `{"p": .., "M": .., "residue": "decimal"}`.
#[derive(Serialize, Deserialize)]
struct PadicRepr {
    p: u64,
    #[serde(rename = "M")]
    m: u32,
    residue: String,
}

impl Serialize for PadicInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PadicRepr { p: self.p, m: self.prec, residue: self.residue.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PadicInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = PadicRepr::deserialize(d)?;
        let residue: BigUint = r
            .residue
            .parse()
            .map_err(|_| serde::de::Error::custom("bad residue digits"))?;
        if r.p < 2 || r.m < 1 {
            return Err(serde::de::Error::custom("need p >= 2 and M >= 1"));
        }
        Ok(PadicInt::new(r.p, r.m, residue))
    }
}

/// Convenience: `x` must be small enough when callers need a machine integer.
pub fn residue_u64(x: &PadicInt) -> Option<u64> {
    x.residue().to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_takes_min_precision() {
        let a = PadicInt::from_i64(5, 4, 7);
        let b = PadicInt::from_i64(5, 2, 3);
        let s = &a + &b;
        assert_eq!(s.precision(), 2);
        assert_eq!(s.residue(), &BigUint::from(10u32));
    }

    #[test]
    fn valuation_of_zero_is_a_lower_bound() {
        let z = PadicInt::zero(5, 3);
        assert_eq!(z.valuation(), Valuation::AtLeast(3));
        let x = PadicInt::from_i64(5, 3, 50);
        assert_eq!(x.valuation(), Valuation::Exact(2));
    }

    #[test]
    fn unit_inverse_round_trips() {
        let x = PadicInt::from_i64(7, 5, 342);
        let inv = x.unit_inverse().unwrap();
        assert_eq!(&x * &inv, PadicInt::one(7, 5));
        let nonunit = PadicInt::from_i64(7, 5, 49);
        assert!(nonunit.unit_inverse().is_err());
    }

    #[test]
    fn log_of_one_is_zero() {
        let u = PadicInt::one(5, 4);
        assert!(padic_log_unit(&u).unwrap().is_zero());
    }

    #[test]
    fn log_doubles_on_squares() {
        // u = 6^2 mod 5^4; log is a homomorphism so log(u) = 2 log 6.
        let six = PadicInt::from_i64(5, 4, 6);
        let u = &six * &six;
        let lhs = padic_log_unit(&u).unwrap();
        let rhs = padic_log_unit(&six).unwrap();
        assert_eq!(lhs, &rhs + &rhs);
    }

    #[test]
    fn log_matches_partial_sums_oracle() {
        // Independent oracle: sum the alternating series term by term as
        // exact rationals and embed each partial sum; once two consecutive
        // partial sums agree mod 7^5 the series has stabilized there.
        let p = 7u64;
        let prec = 5u32;
        let u = PadicInt::from_i64(p, prec, 8);
        let got = padic_log_unit(&u).unwrap();

        let mut partial = Rational::zero();
        let mut last: Option<PadicInt> = None;
        let mut stable = None;
        for k in 1..=40i64 {
            let term = Rational::ratio(7, 1).pow(k).unwrap()
                .checked_div(&Rational::from_int(k))
                .unwrap();
            partial = if k % 2 == 1 { partial + term } else { partial - term };
            let emb = PadicInt::from_rational_with_val(p, prec, &partial).unwrap();
            if let Some(prev) = &last {
                if prev == &emb {
                    stable = Some(emb.clone());
                    break;
                }
            }
            last = Some(emb);
        }
        assert_eq!(got, stable.expect("series stabilizes"));
    }

    #[test]
    fn log_rejects_bad_inputs() {
        assert!(matches!(
            padic_log_unit(&PadicInt::from_i64(2, 4, 3)),
            Err(PadicError::EvenPrime)
        ));
        assert!(matches!(
            padic_log_unit(&PadicInt::from_i64(5, 4, 2)),
            Err(PadicError::NotOneModP(..))
        ));
    }

    #[test]
    fn binomial_tracks_factorial_precision_loss() {
        // C(x, 5) over p=5 loses exactly one digit (v_5(5!) = 1).
        let x = PadicInt::from_i64(5, 4, 12);
        let b = padic_binomial(&x, 5).unwrap();
        assert_eq!(b.precision(), 3);
        // C(12,5) = 792
        assert!(b.congruent(&PadicInt::from_i64(5, 3, 792)));
    }

    #[test]
    fn serde_round_trip() {
        let x = PadicInt::from_i64(5, 3, 117);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"p":5,"M":3,"residue":"117"}"#);
        let y: PadicInt = serde_json::from_str(&j).unwrap();
        assert_eq!(x, y);
    }
}
