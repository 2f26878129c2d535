//! Partitions, Weyl dimension counts, the degree decomposition of matrix
//! polynomials, and the one-row tensor (Pieri) rule.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::RepError;

/// A partition: weakly decreasing non-negative parts, trailing zeros
/// stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.  Panics if the parts
    /// are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The `i`-th part (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Dimension of the irreducible polynomial representation of GL_n with
/// highest weight `lambda` (padded with zeros): the Weyl dimension formula
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn weyl_dim(lambda: &Partition, n: usize) -> Result<u128, RepError> {
    if lambda.length() > n {
        return Err(RepError::LengthOverflow { length: lambda.length(), n });
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in (i + 1)..n {
            let li = i128::from(lambda.part(i));
            let lj = i128::from(lambda.part(j));
            num *= (li - lj + (j as i128 - i as i128)) as u128;
            den *= (j - i) as u128;
        }
    }
    debug_assert_eq!(num % den, 0, "Weyl dimension must be an integer");
    Ok(num / den)
}

/// All partitions of `r` with at most `n` parts, in lexicographically
/// decreasing order.  These index the irreducible summands of the space of
/// degree-`r` polynomials on `m x n` matrices under GL_m x GL_n (`m >= n`),
/// each appearing exactly once.
pub fn cauchy_decompose(r: u32, m: usize, n: usize) -> Result<Vec<Partition>, RepError> {
    if m < n {
        return Err(RepError::BadShape(format!("need m >= n, got m={m} n={n}")));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(r, r, n, &mut stack, &mut out);
    Ok(out)
}

fn gen_partitions(remaining: u32, max_part: u32, slots: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    for p in (1..=hi).rev() {
        stack.push(p);
        gen_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop();
    }
}

/// The dimension identity behind the degree decomposition: summing
/// `dim(lambda, m) * dim(lambda, n)` over the decomposition of degree `r`
/// recovers the dimension `C(mn + r - 1, r)` of the polynomial space.
pub fn cauchy_dimension_check(r: u32, m: usize, n: usize) -> Result<bool, RepError> {
    let mut total: u128 = 0;
    for lambda in cauchy_decompose(r, m, n)? {
        total += weyl_dim(&lambda, m)? * weyl_dim(&lambda, n)?;
    }
    Ok(total == binomial((m * n) as u64 + u64::from(r) - 1, u64::from(r)))
}

/// Tensoring with the one-row representation of degree `k`: all ways of
/// adding a horizontal strip of size `k` to `lambda` within `n` rows.  The
/// result `mu` satisfies `mu_j >= lambda_j` and `mu_j <= lambda_{j-1}` for
/// `j >= 2` (no two added boxes share a column), each shape exactly once.
pub fn pieri(lambda: &Partition, k: u32, n: usize) -> Result<Vec<Partition>, RepError> {
    if lambda.length() > n {
        return Err(RepError::LengthOverflow { length: lambda.length(), n });
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_strips(lambda, k, n, 0, &mut stack, &mut out);
    Ok(out)
}

fn gen_strips(
    lambda: &Partition,
    remaining: u32,
    n: usize,
    row: usize,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == n {
        if remaining == 0 {
            out.push(Partition::new(stack.clone()));
        }
        return;
    }
    let lo = lambda.part(row);
    let hi = if row == 0 { lo + remaining } else { stack[row - 1].min(lambda.part(row - 1)).max(lo) };
    // mu_row ranges over [lo, min(hi, lo + remaining)], weakly decreasing
    // with the previous choice and capped by the interlacing bound.
    let cap = hi.min(lo + remaining).min(if row == 0 { u32::MAX } else { stack[row - 1] });
    let mut mu = cap;
    loop {
        stack.push(mu);
        gen_strips(lambda, remaining - (mu - lo), n, row + 1, stack, out);
        stack.pop();
        if mu == lo {
            break;
        }
        mu -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partition_normalization_and_access() {
        let lam = p(&[3, 1, 0, 0]);
        assert_eq!(lam.parts(), &[3, 1]);
        assert_eq!(lam.length(), 2);
        assert_eq!(lam.weight(), 4);
        assert_eq!(lam.part(5), 0);
        assert_eq!(lam.to_string(), "(3,1)");
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn increasing_parts_are_rejected() {
        p(&[1, 2]);
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(weyl_dim(&p(&[]), 3).unwrap(), 1);
        assert_eq!(weyl_dim(&p(&[2]), 2).unwrap(), 3); // Sym^2 of dim 2
        assert_eq!(weyl_dim(&p(&[1, 1]), 3).unwrap(), 3); // exterior square
        assert_eq!(weyl_dim(&p(&[1]), 4).unwrap(), 4); // standard
        assert_eq!(weyl_dim(&p(&[2, 1]), 3).unwrap(), 8); // adjoint of SL_3
    }

    #[test]
    fn length_overflow_is_an_error() {
        assert!(matches!(
            weyl_dim(&p(&[1, 1, 1]), 2),
            Err(RepError::LengthOverflow { length: 3, n: 2 })
        ));
    }

    #[test]
    fn degree_decomposition_examples() {
        assert_eq!(cauchy_decompose(5, 1, 1).unwrap(), vec![p(&[5])]);
        assert_eq!(cauchy_decompose(2, 2, 1).unwrap(), vec![p(&[2])]);
        assert_eq!(cauchy_decompose(2, 2, 2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert!(cauchy_decompose(2, 1, 2).is_err());
    }

    #[test]
    fn dimension_identity_examples() {
        // 3*1 = C(3,2) for degree 2 on 2x1 matrices.
        assert!(cauchy_dimension_check(2, 2, 1).unwrap());
        // 3*3 + 1*1 = 10 = C(5,2) for degree 2 on 2x2 matrices.
        assert!(cauchy_dimension_check(2, 2, 2).unwrap());
    }

    #[test]
    fn strip_rule_examples() {
        assert_eq!(pieri(&p(&[2]), 0, 2).unwrap(), vec![p(&[2])]);
        assert_eq!(pieri(&p(&[2]), 1, 2).unwrap(), vec![p(&[3]), p(&[2, 1])]);
        // Adding two boxes to (2,1) in 3 rows: no column may gain two.
        let got = pieri(&p(&[2, 1]), 2, 3).unwrap();
        let want = vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn bottom_row_filling_appears_exactly_once() {
        // With all other rows already large, the shape completed by a full
        // bottom row of size k arises in exactly one way.
        let lam = p(&[5, 4, 0]);
        let k = 3;
        let got = pieri(&lam, k, 3).unwrap();
        let target = p(&[5, 4, 3]);
        assert_eq!(got.iter().filter(|mu| **mu == target).count(), 1);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(21, 6), 54264);
        assert_eq!(binomial(3, 5), 0);
    }
}
