//! The p-adic coefficient model: a character-product functional on block
//! matrices with unit minor chains, and the normalizing p-power constants
//! with exponents linear in the complex parameter.

use characters::DirichletCharacter;
use core_arith::{CyclotomicElement, Matrix, PadicInt, Rational};
use serde::Serialize;

use crate::SiegelError;

/// Exponential normalizing constant: a character value at a p-power times
/// `p` raised to a linear form in the parameter `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CnValue {
    /// Exponent `e` of the p-power `p^e` the auxiliary character is
    /// evaluated at; 0 when the character factor is absent (conductor
    /// exponent 0).
    pub character_argument: u64,
    /// Coefficient of `z` in the p-power exponent.
    pub z_coefficient: i64,
    /// Constant term of the p-power exponent.
    pub constant: i64,
}

/// The constant attached to size `n` and conductor exponent `t`: for
/// `t > 0` the character factor at `p^(n t)` times `p^(2 n t z - t n(n+1)/2)`,
/// and for `t = 0` no character factor and `p^(2 n z - n(n+1)/2)`.
pub fn c_n(t: u32, n: u32) -> CnValue {
    let n = i64::from(n);
    let t = i64::from(t);
    if t > 0 {
        CnValue {
            character_argument: (n * t) as u64,
            z_coefficient: 2 * n * t,
            constant: -t * n * (n + 1) / 2,
        }
    } else {
        CnValue { character_argument: 0, z_coefficient: 2 * n, constant: -n * (n + 1) / 2 }
    }
}

/// Reduces a p-integral rational to a residue mod the given power of p.
/// Returns `None` when the rational is not p-integral or not well defined
/// at that modulus.
fn reduce_mod(q: &Rational, p: u64, modulus: u32) -> Option<u64> {
    let mut k = 0u32;
    let mut m = 1u64;
    while m < u64::from(modulus) {
        m *= p;
        k += 1;
    }
    if m != u64::from(modulus) {
        return None;
    }
    let lifted = PadicInt::from_rational(p, k.max(1), q).ok()?;
    core_arith::padic::residue_u64(&lifted).map(|r| r % u64::from(modulus))
}

/// The character-product functional on square matrices of size `r + s + 1`
/// partitioned with row blocks `(s, 1, r)` and column blocks `(r, 1, s)`.
///
/// The value is zero unless every entry is p-integral, every upper-left
/// minor of the lower-left `r x r` block is a p-adic unit, and every
/// upper-left minor of the upper-right `s x s` block is a p-adic unit.  On
/// that locus it is the telescoping product of the character list evaluated
/// on the minor determinants: characters `1..=r` act through the
/// lower-left chain, characters `r+2..=r+s+1` through the upper-right
/// chain, and the middle character is not used.
///
/// All characters must have p-power modulus; values are multiplied inside
/// the cyclotomic field of level the lcm of their orders.
pub fn phi_xi(
    x: &Matrix<Rational>,
    xi: &[DirichletCharacter],
    p: u64,
    r: usize,
    s: usize,
) -> Result<CyclotomicElement, SiegelError> {
    let size = r + s + 1;
    if x.nrows() != size || x.ncols() != size {
        return Err(SiegelError::SizeMismatch { expected: size, got: x.nrows() });
    }
    if xi.len() != size {
        return Err(SiegelError::CharacterCountMismatch { expected: size, got: xi.len() });
    }
    for chi in xi {
        let mut m = u64::from(chi.modulus());
        while m % p == 0 {
            m /= p;
        }
        if m != 1 {
            return Err(SiegelError::BadCharacterModulus { modulus: chi.modulus(), p });
        }
    }
    let level = xi.iter().map(|c| c.order()).fold(1u32, |l, o| num_integer::lcm(l, o));
    let zero = CyclotomicElement::zero(level);

    for i in 0..size {
        for j in 0..size {
            if !p_integral(x.get(i, j), p) {
                return Ok(zero);
            }
        }
    }
    let c_block = x.block(s + 1, 0, r, r);
    let b_block = x.block(0, r + 1, s, s);

    let mut value = CyclotomicElement::one(level);
    let chain = |block: &Matrix<Rational>, idx: &dyn Fn(usize) -> usize, len: usize| -> Option<CyclotomicElement> {
        let mut acc = CyclotomicElement::one(level);
        for i in 1..=len {
            let det = block.leading_minor(i);
            if det.valuation(p) != Some(0) {
                return None;
            }
            let chi = &xi[idx(i) - 1];
            let u = reduce_mod(&det, p, chi.modulus()).expect("p-integral unit");
            let mut factor = chi.value(u).embed(level);
            if i < len {
                let next = &xi[idx(i + 1) - 1];
                let u2 = reduce_mod(&det, p, next.modulus()).expect("p-integral unit");
                factor = factor.mul(&next.value(u2).embed(level).conj());
            }
            acc = acc.mul(&factor);
        }
        Some(acc)
    };

    match chain(&c_block, &|i| i, r) {
        Some(v) => value = value.mul(&v),
        None => return Ok(zero),
    }
    match chain(&b_block, &|i| r + 1 + i, s) {
        Some(v) => value = value.mul(&v),
        None => return Ok(zero),
    }
    Ok(value)
}

fn p_integral(q: &Rational, p: u64) -> bool {
    match q.valuation(p) {
        None => true,
        Some(v) => v >= 0,
    }
}
