//! Interpolation of the divisor-sum coefficients along one p-adic branch.
//!
//! For a fixed coefficient index `n` prime to the level, the weight-`k`
//! coefficient `a_{n,k}` is a finite sum of `d^{k-1}` over divisors.  Each
//! summand factors through the Teichmuller/principal-unit decomposition
//! `d = omega(d) <d>`, so on the branch `k = k0 mod (p-1)` the whole sum
//! becomes a polynomial in `T = (1+p)^{k-1} - 1` with p-adic integer
//! coefficients.  This module constructs that polynomial and evaluates it.

use characters::teichmuller;
use core_arith::{padic_binomial, padic_log_unit, PadicInt};
use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::eisenstein::divisors;
use crate::series::QExpError;

/// A truncated polynomial in `T` with p-adic integer coefficients,
/// remembering the branch data it interpolates.
#[derive(Debug, Clone, PartialEq)]
pub struct IwasawaPoly {
    p: u64,
    prec: u32,
    branch: u32,
    index: u64,
    level: u64,
    coeffs: Vec<PadicInt>,
}

impl IwasawaPoly {
    /// The prime.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Requested working precision (the power of p the construction was run
    /// at; individual coefficients may carry slightly less).
    pub fn precision(&self) -> u32 {
        self.prec
    }

    /// The residue `k0 mod (p-1)` of the weights this branch interpolates.
    pub fn branch(&self) -> u32 {
        self.branch
    }

    /// Truncation degree: coefficients of `T^0 .. T^trunc` are stored.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `T^i`.
    pub fn coeff(&self, i: usize) -> &PadicInt {
        &self.coeffs[i]
    }

    /// All coefficients, constant term first.
    pub fn coeffs(&self) -> &[PadicInt] {
        &self.coeffs
    }

    /// Evaluates at the point `T = (1+p)^(k-1) - 1` attached to weight `k`.
    ///
    /// The result's precision accounts for the discarded tail: every dropped
    /// term is divisible by `T^(trunc+1)`, hence by `p^(trunc+1)`.  Because
    /// `T` is divisible by p, each retained term `c_i T^i` is computed as
    /// `(c_i * unit(T^i)) * p^val(T^i)`, which recovers `val` digits of
    /// absolute precision over the naive product.
    ///
    /// The value interpolates the coefficient family only for weights in
    /// this branch (`k = branch mod (p-1)`); other weights still evaluate
    /// the polynomial, just at a point with no interpolation meaning.
    pub fn evaluate_at_weight(&self, k: i64) -> Result<PadicInt, QExpError> {
        let one_plus_p = PadicInt::from_i64(self.p, self.prec, 1 + self.p as i64);
        let e = k - 1;
        let point = if e >= 0 {
            one_plus_p.pow(e as u64)
        } else {
            one_plus_p.pow(e.unsigned_abs()).unit_inverse()?
        };
        let t = &point - &PadicInt::one(self.p, self.prec);
        let mut sum = self.coeffs[0].clone();
        let mut t_power = PadicInt::one(self.p, self.prec);
        for c in &self.coeffs[1..] {
            t_power = &t_power * &t;
            let term = match t_power.valuation() {
                core_arith::Valuation::Exact(v) => {
                    (&t_power.div_exact_p(v)? * c).mul_p_power(v)
                }
                // The power vanishes to full working precision; the term is
                // known to at least the coefficient's precision plus that.
                core_arith::Valuation::AtLeast(v) => {
                    PadicInt::zero(self.p, c.precision().saturating_add(v))
                }
            };
            sum = &sum + &term;
        }
        let cap = (self.truncation() as u32 + 1).min(sum.precision());
        Ok(sum.reduce_precision(cap))
    }
}

impl Serialize for IwasawaPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IwasawaPoly", 6)?;
        s.serialize_field("p", &self.p)?;
        s.serialize_field("M", &self.prec)?;
        s.serialize_field("branch", &self.branch)?;
        s.serialize_field("index", &self.index)?;
        s.serialize_field("level", &self.level)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

/// Builds the branch polynomial for coefficient index `n`: the sum over
/// divisors `d` of `n` prime to the level of
/// `omega(d)^(k0-1) * (1+T)^(log<d> / log(1+p))`, expanded through `T^trunc`
/// at working precision `p^m`.
///
/// Requires odd `p` dividing the level `np` (so that interpolated
/// coefficients see no Euler factor at p).
pub fn measure_from_family(
    n: u64,
    k0: u32,
    p: u64,
    m: u32,
    trunc: usize,
    np: u64,
) -> Result<IwasawaPoly, QExpError> {
    assert!(k0 >= 1, "branch weight must be positive");
    if np % p != 0 {
        return Err(QExpError::PrimeNotInLevel(p, np));
    }
    let log_base_over_p =
        padic_log_unit(&PadicInt::from_i64(p, m, 1 + p as i64))?.div_exact_p(1)?;
    let inv_log_base = log_base_over_p.unit_inverse()?;

    let mut coeffs = vec![PadicInt::zero(p, m); trunc + 1];
    for d in divisors(n) {
        if d.gcd(&np) != 1 {
            continue;
        }
        let omega = teichmuller(p, d, m)?;
        let omega_factor = omega.pow(u64::from(k0 - 1) % (p - 1));
        let principal = &PadicInt::from_i64(p, m, d as i64) * &omega.unit_inverse()?;
        let exponent = &padic_log_unit(&principal)?.div_exact_p(1)? * &inv_log_base;
        for (i, slot) in coeffs.iter_mut().enumerate() {
            let binom = padic_binomial(&exponent, i as u64)?;
            *slot = &*slot + &(&omega_factor * &binom);
        }
    }
    Ok(IwasawaPoly { p, prec: m, branch: k0 % (p as u32 - 1), index: n, level: np, coeffs })
}
