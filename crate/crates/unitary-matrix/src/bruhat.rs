//! Membership test for the big cell: which members of the split group
//! `U([[0, 1], [-1, 0]])` factor as (block upper triangular) x (long Weyl
//! flip) x (unipotent with entries integral at a prime).
//!
//! Writing `g = [[A, B], [C, D]]` in half-size blocks, a product
//! `q · w · n(X)` with `q = [[A', B'], [0, D']]`, `w = [[0, -1], [1, 0]]` and
//! `n(X) = [[1, X], [0, 1]]` multiplies out to `[[B', B'X - A'], [D', D'X]]`.
//! So a member lies in the cell with `n(X)` integral at `ell` exactly when
//! `det C` is nonzero and every entry of `X = C^{-1} D` is integral at `ell`;
//! the membership equations force `X` to be Hermitian, which makes `n(X)` a
//! member, and then `q = g (w n(X))^{-1}` is one too.

use core_arith::Matrix;
use serde::Serialize;

use crate::forms::{group_membership, standard_doubled_form, weyl_flip};
use crate::iq::IQElement;
use crate::UmatError;

/// The long flip `[[0, -1_n], [1_n, 0]]` of the split form of size `2n`.
pub fn long_weyl(n: usize) -> Matrix<IQElement> {
    weyl_flip(n, 0)
}

/// What the cell test saw, in decision order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BruhatReport {
    /// Half the matrix size.
    pub half_size: usize,
    /// The localization prime.
    pub prime: u64,
    /// Whether the lower-left quarter is invertible over the field.
    pub corner_invertible: bool,
    /// Whether every entry of `C^{-1} D` is integral at the prime
    /// (vacuously false when the corner is singular).
    pub shift_integral: bool,
}

impl BruhatReport {
    /// Whether the matrix lies in the cell.
    pub fn in_cell(&self) -> bool {
        self.corner_invertible && self.shift_integral
    }
}

/// Runs the cell test for a member of the split group of size `2n` at the
/// prime `ell`. Fails on non-members and on odd-sized input.
pub fn bruhat_cell_report(g: &Matrix<IQElement>, ell: u64) -> Result<BruhatReport, UmatError> {
    if !g.is_square() || g.nrows() % 2 != 0 {
        return Err(UmatError::Dimension(format!(
            "the cell test needs an even square matrix, got {}x{}",
            g.nrows(),
            g.ncols()
        )));
    }
    let n = g.nrows() / 2;
    let theta = standard_doubled_form(n);
    if !group_membership(g, &theta)?.is_member() {
        return Err(UmatError::NotInGroup);
    }

    let c = g.block(n, 0, n, n);
    let d = g.block(n, n, n, n);
    let (corner_invertible, shift_integral) = match c.inverse() {
        None => (false, false),
        Some(c_inv) => {
            let x = c_inv.mul(&d);
            let integral = (0..n).all(|i| (0..n).all(|j| x.get(i, j).is_integral_at(ell)));
            (true, integral)
        }
    };
    Ok(BruhatReport { half_size: n, prime: ell, corner_invertible, shift_integral })
}

/// True iff the member `g` factors through the big cell with a unipotent
/// part integral at `ell`.
pub fn bruhat_cell_test(g: &Matrix<IQElement>, ell: u64) -> Result<bool, UmatError> {
    Ok(bruhat_cell_report(g, ell)?.in_cell())
}
