//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are coordinate vectors in the power basis `1, z, ..., z^{d-1}`
//! of `Q[x]/(Phi_N(x))`, where `Phi_N` is the `N`-th cyclotomic polynomial
//! and `d = phi(N)`. All operations are exact; nothing here ever touches a
//! floating-point approximation of a root of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_integer::Integer;
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::ring::ContextRing;
use crate::unipoly::UniPoly;

/// Euler's totient for small moduli.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

static PHI_CACHE: Lazy<Mutex<HashMap<u32, UniPoly<Rational>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`. Results are cached.
pub fn cyclotomic_polynomial(n: u32) -> UniPoly<Rational> {
    assert!(n >= 1);
    if let Some(hit) = PHI_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let poly = if n == 1 {
        UniPoly::new(vec![Rational::from_int(-1), Rational::from_int(1)])
    } else {
        // x^n - 1
        let mut num = UniPoly::monomial(Rational::from_int(1), n as usize);
        num = num.add(&UniPoly::constant(Rational::from_int(-1)));
        let mut quot = num;
        for d in 1..n {
            if n % d == 0 {
                quot = quot.exact_div(&cyclotomic_polynomial(d));
            }
        }
        quot
    };
    debug_assert_eq!(poly.degree(), Some(euler_phi(n) as usize));
    PHI_CACHE.lock().unwrap().insert(n, poly.clone());
    poly
}

/// An element of `Q(zeta_N)` in the power basis mod `Phi_N`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    level: u32,
    /// Exactly `phi(level)` coordinates, lowest power first.
    coords: Vec<Rational>,
}

/// Reduces an arbitrary polynomial in the root of unity into the power
/// basis mod `Phi_level`.
pub fn cyclotomic_reduce(level: u32, poly: &UniPoly<Rational>) -> CyclotomicElement {
    let phi = cyclotomic_polynomial(level);
    let rem = poly.rem_monic(&phi);
    CyclotomicElement::from_reduced(level, rem)
}

impl CyclotomicElement {
    fn from_reduced(level: u32, rem: UniPoly<Rational>) -> Self {
        let d = euler_phi(level) as usize;
        let mut coords = rem.coeffs().to_vec();
        debug_assert!(coords.len() <= d);
        coords.resize(d, Rational::zero());
        CyclotomicElement { level, coords }
    }

    /// Builds from raw coordinates (must have exactly `phi(level)` entries).
    pub fn from_coords(level: u32, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), euler_phi(level) as usize, "coordinate count");
        CyclotomicElement { level, coords }
    }

    pub fn zero(level: u32) -> Self {
        CyclotomicElement::from_reduced(level, UniPoly::zero())
    }

    pub fn one(level: u32) -> Self {
        CyclotomicElement::from_rational(level, Rational::from_int(1))
    }

    pub fn from_rational(level: u32, q: Rational) -> Self {
        cyclotomic_reduce(level, &UniPoly::constant(q))
    }

    /// The chosen primitive root of unity `z`.
    pub fn zeta(level: u32) -> Self {
        Self::zeta_pow(level, 1)
    }

    /// `z^k`, with `k` taken mod `level` (negative exponents allowed).
    pub fn zeta_pow(level: u32, k: i64) -> Self {
        let k = k.rem_euclid(level as i64) as usize;
        cyclotomic_reduce(level, &UniPoly::monomial(Rational::from_int(1), k))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn as_poly(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.level, rhs.level, "mixed cyclotomic levels; embed first");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        CyclotomicElement { level: self.level, coords }
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            level: self.level,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.level, rhs.level, "mixed cyclotomic levels; embed first");
        cyclotomic_reduce(self.level, &self.as_poly().mul(&rhs.as_poly()))
    }

    pub fn scalar_mul(&self, q: &Rational) -> Self {
        CyclotomicElement {
            level: self.level,
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CyclotomicElement::one(self.level);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The Galois action `z -> z^a` for `gcd(a, level) = 1`.
    pub fn galois(&self, a: u64) -> Self {
        let n = self.level as u64;
        let a = a % n;
        assert_eq!(a.gcd(&n), 1, "Galois exponent must be prime to the level");
        let mut raw = vec![Rational::zero(); self.level as usize];
        for (i, c) in self.coords.iter().enumerate() {
            let e = ((i as u64 * a) % n) as usize;
            raw[e] = &raw[e] + c;
        }
        cyclotomic_reduce(self.level, &UniPoly::new(raw))
    }

    /// Complex conjugation `z -> z^{-1}`.
    pub fn conj(&self) -> Self {
        if self.level <= 2 {
            return self.clone();
        }
        self.galois(self.level as u64 - 1)
    }

    /// Rewrites the element in `Q(zeta_M)` for a multiple `M` of the level,
    /// using `zeta_N = zeta_M^{M/N}`.
    pub fn embed(&self, to_level: u32) -> Self {
        assert_eq!(to_level % self.level, 0, "target level must be a multiple");
        let t = (to_level / self.level) as usize;
        let mut raw = vec![Rational::zero(); (self.level as usize - 1) * t + 1];
        for (i, c) in self.coords.iter().enumerate() {
            raw[i * t] = c.clone();
        }
        cyclotomic_reduce(to_level, &UniPoly::new(raw))
    }

    /// Extracts a rational when all higher coordinates vanish.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    /// Absolute field norm: the product of all Galois conjugates, computed
    /// as the resultant of `Phi_level` with the coordinate polynomial.
    pub fn norm(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        cyclotomic_polynomial(self.level).resultant(&self.as_poly())
    }
}

impl ContextRing for CyclotomicElement {
    fn zero_like(&self) -> Self {
        CyclotomicElement::zero(self.level)
    }
    fn one_like(&self) -> Self {
        CyclotomicElement::one(self.level)
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
        CyclotomicElement::from_rational(self.level, Rational::from_int(n))
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z{}", self.level)?,
                _ => write!(f, "({c})*z{}^{i}", self.level)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized form: `{"N": .., "coords": [..]}` with canonical rational strings.
#[derive(Serialize, Deserialize)]
struct CycRepr {
    #[serde(rename = "N")]
    n: u32,
    coords: Vec<Rational>,
}

impl Serialize for CyclotomicElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycRepr { n: self.level, coords: self.coords.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CycRepr::deserialize(d)?;
        if r.n < 1 || r.coords.len() != euler_phi(r.n) as usize {
            return Err(serde::de::Error::custom("coordinate count must be phi(N)"));
        }
        Ok(CyclotomicElement { level: r.n, coords: r.coords })
    }
}
