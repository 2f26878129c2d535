//! Automorphy factors for the block action on matrix half-spaces.
//!
//! A square matrix of even size splits into quarters
//! `g = [[A, B], [C, D]]`; it acts on square points `t` of half the size by
//! `g<t> = (A t + B)(C t + D)^{-1}`, and the automorphy factor is
//! `J(g, t) = det(C t + D)`. The chain rule
//! `J(g h, t) = J(g, h<t>) J(h, t)` is what [`cocycle_check`] verifies.

use core_arith::{Matrix, Ring};

use crate::iq::IQElement;
use crate::UmatError;

fn quarters(
    g: &Matrix<IQElement>,
) -> Result<(Matrix<IQElement>, Matrix<IQElement>, Matrix<IQElement>, Matrix<IQElement>), UmatError>
{
    if !g.is_square() || g.nrows() % 2 != 0 {
        return Err(UmatError::Dimension(format!(
            "even square matrix required, got {}x{}",
            g.nrows(),
            g.ncols()
        )));
    }
    let m = g.nrows() / 2;
    Ok((
        g.block(0, 0, m, m),
        g.block(0, m, m, m),
        g.block(m, 0, m, m),
        g.block(m, m, m, m),
    ))
}

/// `det(C t + D)` for the lower quarters of `g`.
pub fn automorphy_factor(
    g: &Matrix<IQElement>,
    t: &Matrix<IQElement>,
) -> Result<IQElement, UmatError> {
    let (_, _, c, d) = quarters(g)?;
    if t.nrows() != c.ncols() || !t.is_square() {
        return Err(UmatError::Dimension(format!(
            "point must be {0}x{0}, got {1}x{2}",
            c.ncols(),
            t.nrows(),
            t.ncols()
        )));
    }
    Ok(c.mul(t).add(&d).det())
}

/// The fractional-linear action `(A t + B)(C t + D)^{-1}`.
pub fn moebius_action(
    g: &Matrix<IQElement>,
    t: &Matrix<IQElement>,
) -> Result<Matrix<IQElement>, UmatError> {
    let (a, b, c, d) = quarters(g)?;
    if t.nrows() != c.ncols() || !t.is_square() {
        return Err(UmatError::Dimension(format!(
            "point must be {0}x{0}, got {1}x{2}",
            c.ncols(),
            t.nrows(),
            t.ncols()
        )));
    }
    let denom = c.mul(t).add(&d);
    let inv = denom
        .inverse()
        .ok_or_else(|| UmatError::Singular("denominator of the action is singular".into()))?;
    Ok(a.mul(t).add(&b).mul(&inv))
}

/// Whether `J(g h, t) = J(g, h<t>) J(h, t)` holds exactly at the point `t`.
pub fn cocycle_check(
    g: &Matrix<IQElement>,
    h: &Matrix<IQElement>,
    t: &Matrix<IQElement>,
) -> Result<bool, UmatError> {
    let lhs = automorphy_factor(&g.mul(h), t)?;
    let moved = moebius_action(h, t)?;
    let rhs = automorphy_factor(g, &moved)?.mul(&automorphy_factor(h, t)?);
    Ok(lhs == rhs)
}

/// The base point `i · 1_m`.
pub fn imaginary_unit_point(m: usize) -> Matrix<IQElement> {
    Matrix::<IQElement>::identity(m).scalar_mul(&IQElement::i())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip() -> Matrix<IQElement> {
        // [[0, 1], [-1, 0]]
        Matrix::from_rows(vec![
            vec![IQElement::zero(), IQElement::one()],
            vec![IQElement::from_int(-1), IQElement::zero()],
        ])
    }

    #[test]
    fn identity_has_factor_one_and_fixes_points() {
        let t = imaginary_unit_point(3);
        let e = Matrix::identity(6);
        assert_eq!(automorphy_factor(&e, &t).unwrap(), IQElement::one());
        assert_eq!(moebius_action(&e, &t).unwrap(), t);
    }

    #[test]
    fn flip_inverts_the_point_and_has_factor_minus_i() {
        let t = imaginary_unit_point(1);
        let w = flip();
        // J = det(-1 * i + 0) = -i.
        assert_eq!(automorphy_factor(&w, &t).unwrap(), IQElement::i().neg());
        // w<i> = 1 * (-i)^{-1} = i: the point is fixed.
        assert_eq!(moebius_action(&w, &t).unwrap(), t);
        // A real shift moves it: [[1, 1], [0, 1]]<i> = i + 1.
        let shift = Matrix::from_rows(vec![
            vec![IQElement::one(), IQElement::one()],
            vec![IQElement::zero(), IQElement::one()],
        ]);
        assert_eq!(
            moebius_action(&shift, &t).unwrap().get(0, 0),
            &IQElement::gauss_int(1, 1)
        );
    }

    #[test]
    fn cocycle_holds_for_sample_pairs() {
        let t = imaginary_unit_point(1);
        let w = flip();
        let shift = Matrix::from_rows(vec![
            vec![IQElement::one(), IQElement::from_int(2)],
            vec![IQElement::zero(), IQElement::one()],
        ]);
        let scale = Matrix::from_rows(vec![
            vec![IQElement::from_ratio(3, 1), IQElement::zero()],
            vec![IQElement::zero(), IQElement::from_ratio(1, 3)],
        ]);
        for g in [&w, &shift, &scale] {
            for h in [&w, &shift, &scale] {
                assert!(cocycle_check(g, h, &t).unwrap());
            }
        }
    }

    #[test]
    fn singular_denominators_are_reported() {
        let t = imaginary_unit_point(1);
        // C t + D = i - i = 0 for this matrix.
        let bad = Matrix::from_rows(vec![
            vec![IQElement::one(), IQElement::zero()],
            vec![IQElement::one(), IQElement::i().neg()],
        ]);
        assert!(moebius_action(&bad, &t).is_err());
        assert_eq!(automorphy_factor(&bad, &t).unwrap(), IQElement::zero());
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let t = imaginary_unit_point(2);
        assert!(automorphy_factor(&Matrix::identity(3), &t).is_err());
        assert!(automorphy_factor(&Matrix::identity(2), &t).is_err());
    }
}
