//! The archimedean Fourier coefficient in closed form, carried symbolically.
//!
//! The value is a product of a rational number, integer powers of the
//! transcendental units `2*pi*i` and `2/pi`, a power of the determinant, and
//! a formal exponential tag.  No floating point is involved anywhere: two
//! values are equal exactly when all components agree.

use core_arith::Rational;
use serde::Serialize;

use crate::SiegelError;

/// A symbolic archimedean coefficient value.
///
/// Multiplication adds the exponents and multiplies the rational parts; the
/// exponential tags combine by OR (a formal product of exponentials).  The
/// additive zero is represented by a vanishing rational part, which absorbs
/// under multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicArchValue {
    /// Exact rational prefactor (zero means the whole value is zero).
    pub rational_part: Rational,
    /// Exponent of `2*pi*i`.
    pub two_pi_i_exponent: i64,
    /// Exponent of `2/pi`.
    pub two_over_pi_exponent: i64,
    /// Exponent of the determinant of the indexing matrix.
    pub det_power: i64,
    /// Determinant the `det_power` refers to.
    pub det_value: Rational,
    /// Whether the formal Gaussian exponential factor is present.
    pub exponential_tag: bool,
}

impl SymbolicArchValue {
    /// The zero value (all structure collapsed).
    pub fn zero() -> Self {
        SymbolicArchValue {
            rational_part: Rational::from_int(0),
            two_pi_i_exponent: 0,
            two_over_pi_exponent: 0,
            det_power: 0,
            det_value: Rational::from_int(1),
            exponential_tag: false,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rational_part == Rational::from_int(0)
    }

    /// The purely rational content: prefactor times the determinant power,
    /// ignoring the transcendental units and the exponential tag.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::from_int(0);
        }
        &self.rational_part * &self.det_value.pow(self.det_power).expect("nonzero det")
    }

    /// Formal product; exponents add, rational parts multiply.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return SymbolicArchValue::zero();
        }
        SymbolicArchValue {
            rational_part: &self.rational_part * &other.rational_part,
            two_pi_i_exponent: self.two_pi_i_exponent + other.two_pi_i_exponent,
            two_over_pi_exponent: self.two_over_pi_exponent + other.two_over_pi_exponent,
            det_power: self.det_power + other.det_power,
            det_value: &self.det_value * &other.det_value,
            exponential_tag: self.exponential_tag || other.exponential_tag,
        }
    }
}

fn factorial(m: i64) -> Rational {
    let mut acc = Rational::from_int(1);
    for i in 2..=m {
        acc = &acc * &Rational::from_int(i);
    }
    acc
}

/// The closed-form value of the size-`n` archimedean coefficient at weight
/// `kappa`: zero whenever the determinant is not positive, and otherwise
///
/// ```text
/// (-2)^(-n) (2 pi i)^(n kappa) (2/pi)^(n(n-1)/2)
/// ------------------------------------------------  det^(kappa - n) * [exp tag]
///        prod_{j=0}^{n-1} (kappa - j - 1)!
/// ```
///
/// Requires `kappa >= n` (the point where the value is taken is only
/// regular in that range, and the factorials would be undefined below it).
pub fn arch_coeff(n: usize, kappa: i64, det_beta: &Rational) -> Result<SymbolicArchValue, SiegelError> {
    if kappa < n as i64 {
        return Err(SiegelError::WeightTooSmall { kappa, n });
    }
    if det_beta <= &Rational::from_int(0) {
        return Ok(SymbolicArchValue::zero());
    }
    let mut denom = Rational::from_int(1);
    for j in 0..n as i64 {
        denom = &denom * &factorial(kappa - j - 1);
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let front = &Rational::from_int(sign) * &Rational::ratio(1, 2).pow(n as i64).expect("1/2 != 0");
    let rational_part = front.checked_div(&denom).expect("factorials are nonzero");
    Ok(SymbolicArchValue {
        rational_part,
        two_pi_i_exponent: n as i64 * kappa,
        two_over_pi_exponent: (n * (n - 1) / 2) as i64,
        det_power: kappa - n as i64,
        det_value: det_beta.clone(),
        exponential_tag: true,
    })
}
