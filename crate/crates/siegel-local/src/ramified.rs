//! Coefficients at ramified places away from p: the value is a volume unit
//! times an additive character evaluated at an exact rational argument read
//! off designated entries of the indexing matrix.

use core_arith::{Matrix, Rational};
use serde::Serialize;

use crate::SiegelError;

/// Which of the two closely related coefficient formulas applies: the one
/// for matrices of size `n + 1` or the one for size `n` (with `n = a + 2b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RamifiedShape {
    /// Size `a + 2b + 1`.
    Extended,
    /// Size `a + 2b`.
    Plain,
}

/// A ramified coefficient: a symbolic volume unit times the additive
/// character at the recorded exact rational argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamifiedValue {
    /// Label of the volume normalization this value carries as a unit.
    pub volume: String,
    /// Exact argument of the additive character.
    pub exponent: Rational,
}

/// Reads off the additive-character argument of the ramified coefficient:
/// the trace of a strip of entries below the diagonal divided by `x`, plus
/// a run of diagonal entries divided by `y * conj(y)`.
///
/// Entries here are rational stand-ins for elements of the quadratic
/// extension, so the trace of the quadratic extension acts on the `x`-strip
/// as multiplication by 2; the diagonal entries are already in the base
/// field and appear once.
///
/// Index pattern (1-based, `n = a + 2b`):
/// * extended shape, size `n + 1`: strip `(a+b+1+i, i)` for `i = 1..=b`,
///   diagonal `(b+1+i, b+1+i)` for `i = 1..=a`;
/// * plain shape, size `n`: strip `(a+b+i, i)` for `i = 1..=b`,
///   diagonal `(b+i, b+i)` for `i = 1..=a`.
pub fn ramified_coeff(
    beta: &Matrix<Rational>,
    x: &Rational,
    y_norm: &Rational,
    a: usize,
    b: usize,
    shape: RamifiedShape,
) -> Result<RamifiedValue, SiegelError> {
    let n = a + 2 * b;
    let size = match shape {
        RamifiedShape::Extended => n + 1,
        RamifiedShape::Plain => n,
    };
    if beta.nrows() != size || beta.ncols() != size {
        return Err(SiegelError::SizeMismatch { expected: size, got: beta.nrows() });
    }
    let zero = Rational::from_int(0);
    assert!(x != &zero && y_norm != &zero, "scaling parameters must be nonzero");

    let (strip_row_base, diag_base) = match shape {
        RamifiedShape::Extended => (a + b + 1, b + 1),
        RamifiedShape::Plain => (a + b, b),
    };
    let mut strip = Rational::from_int(0);
    for i in 1..=b {
        strip = &strip + beta.get(strip_row_base + i - 1, i - 1);
    }
    let mut diag = Rational::from_int(0);
    for i in 1..=a {
        let d = diag_base + i - 1;
        diag = &diag + beta.get(d, d);
    }
    let traced = &Rational::from_int(2) * &strip.checked_div(x).expect("x nonzero");
    let exponent = &traced + &diag.checked_div(y_norm).expect("y_norm nonzero");
    Ok(RamifiedValue { volume: format!("Vol(S_{size}(O_F))"), exponent })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_matrix(size: usize) -> Matrix<Rational> {
        Matrix::zeros(size, size)
    }

    #[test]
    fn zero_matrix_gives_zero_exponent() {
        let x = Rational::from_int(8);
        let yn = Rational::from_int(9);
        for (shape, size) in [(RamifiedShape::Extended, 4), (RamifiedShape::Plain, 3)] {
            let v = ramified_coeff(&zero_matrix(size), &x, &yn, 1, 1, shape).unwrap();
            assert_eq!(v.exponent, Rational::from_int(0));
        }
    }

    #[test]
    fn strip_entry_equal_to_x_contributes_the_trace_of_one() {
        // a = b = 1, extended shape: size 4, strip entry (4, 1).
        let x = Rational::from_int(8);
        let mut beta = zero_matrix(4);
        beta.set(3, 0, x.clone());
        let v = ramified_coeff(&beta, &x, &Rational::from_int(1), 1, 1, RamifiedShape::Extended)
            .unwrap();
        assert_eq!(v.exponent, Rational::from_int(2));
    }

    #[test]
    fn diagonal_entries_enter_without_doubling() {
        // a = 2, b = 1, plain shape: size 4, diagonal entries (2,2) and (3,3).
        let yn = Rational::from_int(3);
        let mut beta = zero_matrix(4);
        beta.set(1, 1, Rational::from_int(6));
        beta.set(2, 2, Rational::from_int(9));
        let v =
            ramified_coeff(&beta, &Rational::from_int(1), &yn, 2, 1, RamifiedShape::Plain).unwrap();
        assert_eq!(v.exponent, Rational::from_int(5));
    }

    #[test]
    fn exponent_is_linear_in_the_matrix() {
        let x = Rational::ratio(3, 2);
        let yn = Rational::from_int(7);
        let beta = Matrix::from_fn(5, 5, |i, j| Rational::from_int((2 * i + 3 * j + 1) as i64));
        let scaled = beta.scalar_mul(&Rational::from_int(11));
        let v = ramified_coeff(&beta, &x, &yn, 2, 1, RamifiedShape::Extended).unwrap();
        let w = ramified_coeff(&scaled, &x, &yn, 2, 1, RamifiedShape::Extended).unwrap();
        assert_eq!(w.exponent, &Rational::from_int(11) * &v.exponent);
    }

    #[test]
    fn entries_outside_the_pattern_are_ignored() {
        let mut beta = zero_matrix(4);
        beta.set(0, 3, Rational::from_int(5));
        beta.set(0, 0, Rational::from_int(5));
        let v = ramified_coeff(
            &beta,
            &Rational::from_int(2),
            &Rational::from_int(3),
            1,
            1,
            RamifiedShape::Extended,
        )
        .unwrap();
        assert_eq!(v.exponent, Rational::from_int(0));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let beta = zero_matrix(3);
        assert!(matches!(
            ramified_coeff(
                &beta,
                &Rational::from_int(1),
                &Rational::from_int(1),
                1,
                1,
                RamifiedShape::Extended
            ),
            Err(SiegelError::SizeMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn volume_label_records_the_size() {
        let v = ramified_coeff(
            &zero_matrix(4),
            &Rational::from_int(1),
            &Rational::from_int(1),
            1,
            1,
            RamifiedShape::Extended,
        )
        .unwrap();
        assert_eq!(v.volume, "Vol(S_4(O_F))");
    }
}
