//! Dirichlet characters as exact exponent tables over `(Z/N)^x`.

use core_arith::{CyclotomicElement, Rational};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("character order must be at least 1")]
    BadOrder,
    #[error("need one image per canonical generator: expected {expected}, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("image of generator {generator} has order {image_order}, which does not divide the generator order {generator_order}")]
    ImageOrderMismatch { generator: u32, image_order: u32, generator_order: u32 },
    #[error("character mod {0} is not primitive (conductor {1})")]
    NotPrimitive(u32, u32),
    #[error("{0} is not a unit mod {1}")]
    NotAUnit(u64, u32),
}

/// Multiplicative order of `a` mod `n` (requires `gcd(a, n) = 1`).
fn element_order(a: u64, n: u64) -> u32 {
    let mut x = a % n;
    let mut ord = 1u32;
    while x != 1 % n {
        x = x * (a % n) % n;
        ord += 1;
        assert!(u64::from(ord) <= n, "element is not a unit");
    }
    ord
}

fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn primitive_root_mod_pk(p: u32, k: u32) -> u64 {
    let m = u64::from(p).pow(k);
    let target = core_arith::euler_phi(p.pow(k));
    (2..m)
        .find(|&g| g % u64::from(p) != 0 && element_order(g, m) == target)
        .expect("odd prime powers are cyclic")
}

/// Solves `x = a mod m`, `x = 1 mod n/m` for coprime factors of `n`.
fn crt_lift(a: u64, m: u64, n: u64) -> u64 {
    let rest = n / m;
    debug_assert_eq!(m.gcd(&rest), 1);
    let e = (rest as i64).extended_gcd(&(m as i64));
    // rest * x = 1 mod m
    let inv = e.x.rem_euclid(m as i64) as u64;
    let t = (a % m + m - 1 % m) % m * inv % m; // t = (a - 1) * rest^{-1} mod m
    let x = (1 + rest * t) % n;
    debug_assert_eq!(x % m, a % m);
    debug_assert_eq!(x % rest, 1 % rest);
    x
}

/// Canonical generators of `(Z/N)^x` with their orders: one primitive root
/// per odd prime power, and `-1`, `5` for powers of two at least 8.
pub fn unit_generators(n: u32) -> Vec<(u32, u32)> {
    assert!(n >= 1);
    if n <= 2 {
        return Vec::new();
    }
    let nn = u64::from(n);
    let mut gens = Vec::new();
    for (p, k) in factorize(n) {
        let m = u64::from(p).pow(k);
        if p == 2 {
            match k {
                1 => {}
                2 => gens.push((crt_lift(3, m, nn), 2u32)),
                _ => {
                    gens.push((crt_lift(m - 1, m, nn), 2u32));
                    gens.push((crt_lift(5, m, nn), 1 << (k - 2)));
                }
            }
        } else {
            let g = primitive_root_mod_pk(p, k);
            gens.push((crt_lift(g, m, nn), core_arith::euler_phi(p.pow(k))));
        }
    }
    gens.into_iter().map(|(g, o)| (g as u32, o)).collect()
}

/// A Dirichlet character mod `N`, stored as a full value table.
#[derive(Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u32,
    /// Exact multiplicative order of the character.
    order: u32,
    conductor: u32,
    /// `exponents[a] = Some(e)` means the value at `a` is `zeta_order^e`;
    /// `None` marks non-units, where the value is 0.
    exponents: Vec<Option<u32>>,
}

/// Builds the character mod `N` sending the `i`-th canonical generator to
/// `zeta_order^{images[i]}`. Every image must be a root of unity whose order
/// divides the corresponding generator order, otherwise no multiplicative
/// extension exists.
pub fn make_character(
    modulus: u32,
    order: u32,
    images: &[u32],
) -> Result<DirichletCharacter, CharError> {
    if order == 0 {
        return Err(CharError::BadOrder);
    }
    let gens = unit_generators(modulus);
    if gens.len() != images.len() {
        return Err(CharError::WrongImageCount { expected: gens.len(), got: images.len() });
    }
    for (&(g, gord), &e) in gens.iter().zip(images) {
        let image_order = order / order.gcd(&e);
        if gord % image_order != 0 {
            return Err(CharError::ImageOrderMismatch {
                generator: g,
                image_order,
                generator_order: gord,
            });
        }
    }
    // Walk the unit group as a mixed-radix odometer over the generator
    // basis, tracking residue and exponent incrementally. When a digit
    // wraps, the residue is multiplied by g^{ord(g)} = 1 and the exponent
    // by ord(g)*e = 0 mod order (the precondition above), so both stay
    // consistent through carries.
    let n = modulus as usize;
    let mut exponents = vec![None; n.max(1)];
    let mut digits = vec![0u32; gens.len()];
    let mut residue: u64 = 1 % u64::from(modulus.max(1));
    let mut exponent: u64 = 0;
    loop {
        exponents[residue as usize] = Some((exponent % u64::from(order)) as u32);
        let mut i = 0;
        loop {
            if i == gens.len() {
                return Ok(DirichletCharacter::from_exponent_table(modulus, order, exponents));
            }
            digits[i] += 1;
            residue = residue * u64::from(gens[i].0) % u64::from(modulus);
            exponent += u64::from(images[i]);
            if digits[i] < gens[i].1 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

impl DirichletCharacter {
    /// Normalizes an exponent table: shrinks the order to the exact order of
    /// the character and computes the conductor.
    fn from_exponent_table(modulus: u32, order: u32, table: Vec<Option<u32>>) -> Self {
        // Exact order: the image subgroup is generated by zeta^g where g is
        // the gcd of all exponents (and the order).
        let mut g = order;
        for e in table.iter().flatten() {
            g = g.gcd(e);
        }
        debug_assert!(g >= 1);
        let exact = order / g;
        let exponents: Vec<Option<u32>> = table.iter().map(|e| e.map(|e| e / g)).collect();
        let mut chi = DirichletCharacter { modulus, order: exact, conductor: modulus, exponents };
        chi.conductor = chi.compute_conductor();
        chi
    }

    /// Smallest divisor `d` of `N` such that the character is constant on
    /// units congruent mod `d`.
    fn compute_conductor(&self) -> u32 {
        let n = self.modulus;
        let mut divisors: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        'next: for d in divisors {
            for a in 1..=u64::from(n.max(1)) {
                let a = (a % u64::from(n.max(1))) as usize;
                if self.exponents[a].is_none() {
                    continue;
                }
                if a as u32 % d == 1 % d && self.exponents[a] != Some(0) {
                    continue 'next;
                }
            }
            return d;
        }
        n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Exponent `e` with value `zeta_order^e` at `a`, `None` on non-units.
    pub fn exponent_at(&self, a: u64) -> Option<u32> {
        let idx = (a % u64::from(self.modulus.max(1))) as usize;
        self.exponents[idx]
    }

    /// The exact value at `a` in `Q(zeta_{ord})` (zero on non-units).
    pub fn value(&self, a: u64) -> CyclotomicElement {
        match self.exponent_at(a) {
            Some(e) => CyclotomicElement::zeta_pow(self.order, i64::from(e)),
            None => CyclotomicElement::zero(self.order),
        }
    }

    /// The value at `-1`, which is always `+1` or `-1`.
    pub fn parity(&self) -> i32 {
        let e = self.exponent_at(u64::from(self.modulus.max(2)) - 1).expect("-1 is a unit");
        if e == 0 {
            1
        } else {
            debug_assert_eq!(2 * e, self.order, "value at -1 must square to 1");
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == 1
    }

    /// Complex conjugate character (all exponents negated).
    pub fn conjugate(&self) -> Self {
        let order = self.order;
        let exponents = self
            .exponents
            .iter()
            .map(|e| e.map(|e| (order - e) % order))
            .collect();
        DirichletCharacter { modulus: self.modulus, order, conductor: self.conductor, exponents }
    }

    /// Pointwise product of two characters with the same modulus.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "character product needs a common modulus");
        let l = self.order.lcm(&other.order);
        let table: Vec<Option<u32>> = (0..self.exponents.len())
            .map(|a| match (self.exponents[a], other.exponents[a]) {
                (Some(e1), Some(e2)) => {
                    Some((e1 * (l / self.order) + e2 * (l / other.order)) % l)
                }
                _ => None,
            })
            .collect();
        DirichletCharacter::from_exponent_table(self.modulus, l, table)
    }

    /// The primitive character mod the conductor inducing this one.
    pub fn primitive_part(&self) -> Self {
        let c = self.conductor;
        if c == self.modulus {
            return self.clone();
        }
        let table: Vec<Option<u32>> = (0..c as u64)
            .map(|b| {
                if u64::from(c).gcd(&b) != 1 && c > 1 {
                    return None;
                }
                // Find a lift of b mod c that is a unit mod N.
                (0..u64::from(self.modulus / c))
                    .map(|k| b + k * u64::from(c))
                    .find_map(|a| self.exponent_at(a))
            })
            .collect();
        DirichletCharacter::from_exponent_table(c, self.order, table)
    }

    /// Restriction away from extra primes: the character mod `m` (a multiple
    /// of the conductor dividing no new primes is not required; any multiple
    /// of the conductor works) induced by this one.
    pub fn induce(&self, m: u32) -> Self {
        assert_eq!(m % self.conductor, 0, "can only induce to multiples of the conductor");
        let prim = self.primitive_part();
        let table: Vec<Option<u32>> = (0..u64::from(m))
            .map(|a| {
                if u64::from(m).gcd(&a) != 1 && m > 1 {
                    None
                } else {
                    prim.exponent_at(a)
                }
            })
            .collect();
        DirichletCharacter::from_exponent_table(m, prim.order, table)
    }

    /// All characters mod `n`, enumerated through the generator basis.
    pub fn all_mod(n: u32) -> Vec<Self> {
        let gens = unit_generators(n);
        let lambda = gens.iter().fold(1u32, |acc, &(_, o)| acc.lcm(&o));
        let mut out = Vec::new();
        let mut digits = vec![0u32; gens.len()];
        loop {
            let images: Vec<u32> = digits
                .iter()
                .zip(&gens)
                .map(|(&c, &(_, o))| c * (lambda / o))
                .collect();
            out.push(make_character(n, lambda, &images).expect("canonical images are consistent"));
            let mut i = 0;
            loop {
                if i == gens.len() {
                    return out;
                }
                digits[i] += 1;
                if digits[i] < gens[i].1 {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

impl std::fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "character mod {} (order {}, conductor {})",
            self.modulus, self.order, self.conductor
        )
    }
}

/// Wire form: the images of the canonical generators, from which the table
/// is rebuilt on deserialization.
#[derive(Serialize, Deserialize)]
struct CharRepr {
    modulus: u32,
    generator_images: Vec<u32>,
    order: u32,
}

impl Serialize for DirichletCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let images = unit_generators(self.modulus)
            .iter()
            .map(|&(g, _)| self.exponent_at(u64::from(g)).expect("generators are units"))
            .collect();
        CharRepr { modulus: self.modulus, generator_images: images, order: self.order }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DirichletCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CharRepr::deserialize(d)?;
        make_character(r.modulus, r.order, &r.generator_images)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

/// Convenience for tests: the value as a rational when the character is
/// quadratic or principal.
pub fn rational_value(chi: &DirichletCharacter, a: u64) -> Option<Rational> {
    chi.value(a).to_rational()
}
