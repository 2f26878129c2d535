//! Schur polynomials by direct tableau enumeration — the independent
//! oracle for the strip rule: products of these polynomials are computed by
//! raw monomial expansion, with no combinatorial shortcut.

use core_arith::{MPoly, Rational};

use crate::partition::Partition;

/// The Schur polynomial `s_lambda(x_1..x_n)`: the generating polynomial of
/// semistandard tableaux of shape `lambda` (rows weakly increase, columns
/// strictly increase, entries in `1..=n`), each contributing the monomial
/// of its content.
pub fn schur_polynomial(lambda: &Partition, n: usize) -> MPoly<Rational> {
    if lambda.length() > n {
        return MPoly::zero();
    }
    if lambda.parts().is_empty() {
        return MPoly::one();
    }
    let shape: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&c| vec![0; c]).collect();
    let mut acc = MPoly::zero();
    fill_cell(&shape, n, 0, 0, &mut filling, &mut acc);
    acc
}

fn fill_cell(
    shape: &[usize],
    n: usize,
    row: usize,
    col: usize,
    filling: &mut Vec<Vec<usize>>,
    acc: &mut MPoly<Rational>,
) {
    if row == shape.len() {
        let mut exps = vec![0u16; n];
        for r in filling.iter() {
            for &e in r {
                exps[e - 1] += 1;
            }
        }
        *acc = acc.add(&MPoly::term(Rational::from_int(1), exps));
        return;
    }
    let (next_row, next_col) = if col + 1 < shape[row] { (row, col + 1) } else { (row + 1, 0) };
    let min_left = if col > 0 { filling[row][col - 1] } else { 1 };
    let min_above = if row > 0 && shape[row - 1] > col { filling[row - 1][col] + 1 } else { 1 };
    for v in min_left.max(min_above)..=n {
        filling[row][col] = v;
        fill_cell(shape, n, next_row, next_col, filling, acc);
    }
    filling[row][col] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn one_row_shapes_are_complete_homogeneous_sums() {
        // s_(2) in two variables: x^2 + xy + y^2.
        let s = schur_polynomial(&p(&[2]), 2);
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s.coeff(&[1, 1]), Rational::from_int(1));
    }

    #[test]
    fn one_column_shapes_are_elementary_sums() {
        // s_(1,1) in three variables: xy + xz + yz.
        let s = schur_polynomial(&p(&[1, 1]), 3);
        assert_eq!(s.num_terms(), 3);
        assert_eq!(s.coeff(&[1, 1, 0]), Rational::from_int(1));
        assert_eq!(s.coeff(&[2, 0, 0]), Rational::from_int(0));
    }

    #[test]
    fn hook_shape_has_the_kostka_multiplicities() {
        // s_(2,1) in 3 variables: monomial x1^2 x2 appears once, x1 x2 x3
        // twice (two tableaux of content (1,1,1)).
        let s = schur_polynomial(&p(&[2, 1]), 3);
        assert_eq!(s.coeff(&[2, 1, 0]), Rational::from_int(1));
        assert_eq!(s.coeff(&[1, 1, 1]), Rational::from_int(2));
    }

    #[test]
    fn too_many_rows_vanish() {
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn specialization_at_ones_counts_dimension() {
        // Substituting every variable = 1 gives the number of tableaux,
        // which is the Weyl dimension.
        let lam = p(&[3, 1]);
        let n = 3;
        let s = schur_polynomial(&lam, n);
        let ones = vec![Rational::from_int(1); n];
        let dim = crate::partition::weyl_dim(&lam, n).unwrap();
        assert_eq!(s.eval(&ones), Rational::from_int(dim as i64));
    }
}
