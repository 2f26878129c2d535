//! The level-restricted divisor-sum coefficient family, its q-expansions,
//! the weight-shift functional equation, and Kummer congruences.

use core_arith::Rational;
use num_integer::Integer;
use serde::Serialize;

use crate::series::{delta, QExpError, QExpansion};

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// `a_{n,k} = sum_{d | n} d^{k-1}` when `gcd(n, Np) = 1`, and `0` otherwise.
/// Negative weights are allowed; the summands are then rationals `1/d^{1-k}`.
pub fn eisenstein_coeff(k: i64, n: u64, np: u64) -> Rational {
    assert!(n >= 1 && np >= 1);
    if n.gcd(&np) != 1 {
        return Rational::from_int(0);
    }
    let mut acc = Rational::from_int(0);
    for d in divisors(n) {
        acc = &acc + &Rational::from_int(d as i64).pow(k - 1).expect("d >= 1");
    }
    acc
}

/// The q-expansion `sum_{n >= 1} a_{n,k} q^n` through `q^trunc`, built by a
/// divisor sieve (no constant term; the family starts at `n = 1`).
pub fn eisenstein_family(k: i64, np: u64, trunc: usize) -> QExpansion<Rational> {
    let mut coeffs = vec![Rational::from_int(0); trunc];
    for d in 1..=trunc as u64 {
        if d.gcd(&np) != 1 {
            continue;
        }
        let dpow = Rational::from_int(d as i64).pow(k - 1).expect("d >= 1");
        let mut m = d;
        while m <= trunc as u64 {
            if m.gcd(&np) == 1 {
                let slot = &mut coeffs[(m - 1) as usize];
                *slot = &*slot + &dpow;
            }
            m += d;
        }
    }
    QExpansion::from_coeffs(coeffs).with_labels(format!("weight {k}"), format!("level {np}"))
}

/// One coefficient disagreement in a functional-equation check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeDiscrepancy {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of a weight-shift functional-equation check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeReport {
    pub a: i64,
    pub b: i64,
    #[serde(rename = "Np")]
    pub np: u64,
    pub checked_through: usize,
    pub equal: bool,
    pub first_discrepancy: Option<FeDiscrepancy>,
}

/// Checks the two-sided weight-shift identity through `q^trunc`: the `b`-th
/// derivative power of the weight `a-b+1` family against the `a`-th
/// derivative power of the weight `b-a+1` family.
///
/// `b` (and even `a`) may be negative. Both exponents are shifted by the
/// same amount until non-negative; the shift multiplies both sides'
/// coefficients by the same nonzero `n^shift`, so equality is unchanged.
pub fn functional_equation_check(a: i64, b: i64, np: u64, trunc: usize) -> FeReport {
    let shift = (-a.min(b)).max(0);
    let lhs_pow = (b + shift) as u32;
    let rhs_pow = (a + shift) as u32;
    let lhs = delta(&eisenstein_family(a - b + 1, np, trunc), lhs_pow);
    let rhs = delta(&eisenstein_family(b - a + 1, np, trunc), rhs_pow);
    let mut first = None;
    for n in 1..=trunc {
        if lhs.coeff(n) != rhs.coeff(n) {
            first = Some(FeDiscrepancy {
                n,
                lhs: lhs.coeff(n).clone(),
                rhs: rhs.coeff(n).clone(),
            });
            break;
        }
    }
    FeReport { a, b, np, checked_through: trunc, equal: first.is_none(), first_discrepancy: first }
}

/// Congruence between weights in one p-adic branch: for
/// `k = k' mod (p-1) p^{m-1}`, the coefficients `a_{n,k}` and `a_{n,k'}`
/// agree mod `p^m` (every divisor involved is a unit mod p, so both sides
/// are p-integral even at negative weights).
pub fn kummer_check(
    n: u64,
    k: i64,
    k_prime: i64,
    p: u64,
    m: u32,
    np: u64,
) -> Result<bool, QExpError> {
    if np % p != 0 {
        return Err(QExpError::PrimeNotInLevel(p, np));
    }
    let modulus = (p - 1) as i64 * (p as i64).pow(m - 1);
    if (k - k_prime).rem_euclid(modulus) != 0 {
        return Err(QExpError::CongruenceViolation(k, k_prime, modulus as u64));
    }
    let diff = &eisenstein_coeff(k, n, np) - &eisenstein_coeff(k_prime, n, np);
    Ok(match diff.valuation(p) {
        None => true,
        Some(v) => v >= i64::from(m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_at_one_is_always_one() {
        for k in [-5i64, 0, 1, 7] {
            assert_eq!(eisenstein_coeff(k, 1, 1), Rational::from_int(1));
        }
    }

    #[test]
    fn weight_three_coefficient_at_six() {
        // divisors 1, 2, 3, 6 squared: 1 + 4 + 9 + 36.
        assert_eq!(eisenstein_coeff(3, 6, 5), Rational::from_int(50));
    }

    #[test]
    fn level_condition_kills_coefficients() {
        assert_eq!(eisenstein_coeff(3, 10, 5), Rational::from_int(0));
    }

    #[test]
    fn family_matches_single_coefficients() {
        let f = eisenstein_family(4, 6, 60);
        for n in 1..=60u64 {
            assert_eq!(f.coeff(n as usize), &eisenstein_coeff(4, n, 6), "n = {n}");
        }
    }

    #[test]
    fn negative_weight_scaling_recovers_positive_weights() {
        // Applying the operator twice to the weight -1 family reproduces the
        // weight 3 family at n = 6: 36 * (1 + 1/4 + 1/9 + 1/36) = 50.
        let f = delta(&eisenstein_family(-1, 5, 10), 2);
        assert_eq!(f.coeff(6), &Rational::from_int(50));
    }

    #[test]
    fn functional_equation_diagonal_is_trivial() {
        let r = functional_equation_check(3, 3, 5, 50);
        assert!(r.equal);
    }

    #[test]
    fn functional_equation_small_cases() {
        assert!(functional_equation_check(2, 0, 5, 500).equal);
        assert!(functional_equation_check(5, 2, 6, 1000).equal);
        // Negative lower exponent exercises the shift path.
        assert!(functional_equation_check(2, -1, 3, 200).equal);
    }

    #[test]
    fn a_doctored_family_fails_the_check() {
        // Honesty control: the checker must be able to fail. Compare the
        // shifted sides at mismatched levels, which differ at the first n
        // divisible by exactly one level.
        let lhs = delta(&eisenstein_family(3, 5, 50), 0);
        let rhs = delta(&eisenstein_family(3, 7, 50), 0);
        assert_ne!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn kummer_congruence_examples() {
        assert!(kummer_check(6, 3, 3, 5, 2, 5).unwrap());
        assert!(kummer_check(6, 3, 23, 5, 2, 5).unwrap());
        assert!(kummer_check(4, 2, 4, 3, 1, 3).unwrap());
    }

    #[test]
    fn kummer_preconditions_are_enforced() {
        assert!(matches!(
            kummer_check(6, 3, 23, 5, 2, 7),
            Err(QExpError::PrimeNotInLevel(5, 7))
        ));
        // 3 and 5 differ by 2, not a multiple of (5-1)*5 = 20.
        assert!(matches!(
            kummer_check(6, 3, 5, 5, 2, 5),
            Err(QExpError::CongruenceViolation(..))
        ));
    }

    #[test]
    fn kummer_congruences_hold_at_negative_weights() {
        // k = -1 and k' = 19 differ by 20 = (5-1)*5.
        assert!(kummer_check(6, -1, 19, 5, 2, 5).unwrap());
    }

    #[test]
    fn divisor_enumeration_is_complete_and_sorted() {
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(97), vec![1, 97]);
    }
}
