//! The unramified local polynomial at split rank one, an independent
//! counting oracle for it, the rank-one shadow of the intertwining
//! functional equation, and the assembly of local factors into global
//! divisor sums.

use core_arith::{Rational, UniPoly};
use num_integer::Integer;
use serde::Serialize;

use crate::SiegelError;

/// The rank-one local polynomial attached to an index of valuation `a`:
/// the geometric sum `1 + X + ... + X^a`.  A unit index (`a = 0`) gives the
/// constant polynomial 1.
pub fn siegel_series_rank1(a: u32) -> UniPoly<Rational> {
    UniPoly::new(vec![Rational::from_int(1); a as usize + 1])
}

/// Raw pair counts behind the rank-one polynomial: solutions of
/// `x * y = ell^a` in residues mod `ell^m`, graded by the valuation of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityCount {
    pub ell: u64,
    pub a: u32,
    pub depth: u32,
    /// `graded[i]` counts solutions with `val(x) = i`, for `i = 0..=a`.
    pub graded: Vec<u64>,
    pub total: u64,
}

/// Exhaustively counts pairs `(x, y)` mod `ell^m` with `x * y = ell^a`,
/// graded by the valuation of `x`.  Requires `m > a` so that the target is
/// a nonzero residue and every solution has `val(x) <= a`.
///
/// Dictionary to the polynomial (fixed by matching `a = 0` and `a = 1`):
/// each graded class holds exactly `ell^(m-1) * (ell - 1)` pairs, so
/// dividing the graded counts by `ell^m * (1 - 1/ell)` yields the
/// coefficient 1 of `X^i` for every `i <= a` — the polynomial above.
pub fn density_oracle_rank1(ell: u64, a: u32, m: u32) -> Result<DensityCount, SiegelError> {
    if m <= a {
        return Err(SiegelError::DepthTooShallow { depth: m, a });
    }
    let modulus = ell.checked_pow(m).expect("modulus overflow");
    let target = ell.pow(a) % modulus;
    let mut graded = vec![0u64; a as usize + 1];
    for x in 1..modulus {
        let v = valuation_in(x, ell);
        if v > a {
            continue;
        }
        for y in 0..modulus {
            if (x as u128 * y as u128) % modulus as u128 == target as u128 {
                graded[v as usize] += 1;
            }
        }
    }
    let total = graded.iter().sum();
    Ok(DensityCount { ell, a, depth: m, graded, total })
}

impl DensityCount {
    /// Applies the documented dictionary: graded counts, each divided by
    /// `ell^m (1 - 1/ell)`, read as polynomial coefficients.
    pub fn to_polynomial(&self) -> UniPoly<Rational> {
        let unit_classes = &Rational::from_int(self.ell.pow(self.depth) as i64)
            * &(&Rational::from_int(1) - &Rational::ratio(1, self.ell as i64));
        UniPoly::new(
            self.graded
                .iter()
                .map(|&c| Rational::from_int(c as i64).checked_div(&unit_classes).expect("ell > 1"))
                .collect(),
        )
    }
}

fn valuation_in(mut x: u64, ell: u64) -> u32 {
    let mut v = 0;
    while x % ell == 0 {
        x /= ell;
        v += 1;
    }
    v
}

/// The rank-one shadow of the intertwining functional equation:
/// `ell^(a k) * sum_i ell^(-k i) = sum_i ell^(k i)` for `i = 0..=a`,
/// checked exactly in the rationals.
pub fn kudla_sweet_rank1_check(ell: u64, a: u32, k: i64) -> bool {
    let base = Rational::from_int(ell as i64);
    let mut lhs_sum = Rational::from_int(0);
    let mut rhs = Rational::from_int(0);
    for i in 0..=i64::from(a) {
        lhs_sum = &lhs_sum + &base.pow(-k * i).expect("ell nonzero");
        rhs = &rhs + &base.pow(k * i).expect("ell nonzero");
    }
    let lhs = &base.pow(i64::from(a) * k).expect("ell nonzero") * &lhs_sum;
    lhs == rhs
}

/// Factorization into (prime, exponent) pairs by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Product of the rank-one local polynomials over the primes dividing `n`,
/// each evaluated at `ell^(k-1)`.  For `n` prime to the level this equals
/// the global divisor-sum coefficient of weight `k` at index `n`.
pub fn euler_assembly(n: u64, k: i64, np: u64) -> Result<Rational, SiegelError> {
    if n.gcd(&np) != 1 {
        return Err(SiegelError::LevelSharesFactor { n, np });
    }
    let mut acc = Rational::from_int(1);
    for (ell, a) in factorize(n) {
        let point = Rational::from_int(ell as i64).pow(k - 1).expect("ell nonzero");
        acc = &acc * &siegel_series_rank1(a).eval(&point);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_index_gives_the_constant_one() {
        assert_eq!(siegel_series_rank1(0), UniPoly::constant(Rational::from_int(1)));
    }

    #[test]
    fn valuation_two_gives_three_terms() {
        let h = siegel_series_rank1(2);
        assert_eq!(h.degree(), Some(2));
        assert_eq!(h.eval(&Rational::from_int(2)), Rational::from_int(7));
        assert_eq!(siegel_series_rank1(3).eval(&Rational::from_int(2)), Rational::from_int(15));
    }

    #[test]
    fn density_counts_match_the_polynomial_in_small_cases() {
        // The two calibration points that pin the dictionary down.
        let d0 = density_oracle_rank1(3, 0, 1).unwrap();
        assert_eq!(d0.graded, vec![2]); // (1,1), (2,2): x*y = 1 mod 3
        assert_eq!(d0.to_polynomial(), siegel_series_rank1(0));

        let d1 = density_oracle_rank1(3, 1, 3).unwrap();
        assert_eq!(d1.to_polynomial(), siegel_series_rank1(1));

        let d2 = density_oracle_rank1(2, 2, 4).unwrap();
        assert_eq!(d2.to_polynomial(), siegel_series_rank1(2));
    }

    #[test]
    fn shallow_depth_is_rejected() {
        assert!(matches!(
            density_oracle_rank1(3, 2, 2),
            Err(SiegelError::DepthTooShallow { depth: 2, a: 2 })
        ));
    }

    #[test]
    fn functional_equation_shadow_examples() {
        assert!(kudla_sweet_rank1_check(2, 0, 3));
        // 4 * (1 + 1/2 + 1/4) = 7 = 1 + 2 + 4.
        assert!(kudla_sweet_rank1_check(2, 2, 1));
        assert!(kudla_sweet_rank1_check(3, 3, 2));
        assert!(kudla_sweet_rank1_check(5, 4, -3));
    }

    #[test]
    fn assembly_reproduces_divisor_sums() {
        // (1 + 4 + 16)(1 + 9) = 210 = sigma_2(12).
        assert_eq!(euler_assembly(12, 3, 5).unwrap(), Rational::from_int(210));
        assert_eq!(euler_assembly(1, 7, 5).unwrap(), Rational::from_int(1));
        assert_eq!(euler_assembly(7, 3, 5).unwrap(), Rational::from_int(50));
    }

    #[test]
    fn assembly_requires_coprimality() {
        assert!(matches!(
            euler_assembly(10, 3, 5),
            Err(SiegelError::LevelSharesFactor { n: 10, np: 5 })
        ));
    }

    #[test]
    fn factorization_round_trips() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }
}
