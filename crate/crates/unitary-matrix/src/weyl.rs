//! The coordinate-interchange permutation and its conjugation action on
//! upper-unipotent blocks.
//!
//! [`interchange_weyl`] swaps the first two coordinate groups of a space of
//! size `n + 2` (block sizes `b+1` and `a`), fixing the rest. Embedded as the
//! first factor of the doubling — which by [`weyl_block_identity_check`]
//! coincides with the plain block-diagonal extension — it conjugates an
//! upper-unipotent matrix by permuting the rows of its corner block in a
//! fixed pattern, which the check verifies symbolically.

use core_arith::{MPoly, Matrix};

use crate::doubling::DoublingArrangement;
use crate::forms::{place_blocks, symbol_block};
use crate::iq::IQElement;

/// Permutation of size `n + 2` interchanging the leading `b + 1` coordinates
/// with the following `a`, fixing the remaining `b + 1`.
pub fn interchange_weyl(a: usize, b: usize) -> Matrix<IQElement> {
    place_blocks(
        &[b + 1, a, b, 1],
        &[a, b + 1, b, 1],
        &[
            (0, 1, Matrix::identity(b + 1)),
            (1, 0, Matrix::identity(a)),
            (2, 2, Matrix::identity(b)),
            (3, 3, Matrix::identity(1)),
        ],
    )
}

fn upper_unipotent(m: &Matrix<MPoly<IQElement>>) -> Matrix<MPoly<IQElement>> {
    let k = m.nrows();
    place_blocks(
        &[k, k],
        &[k, k],
        &[
            (0, 0, Matrix::identity(k)),
            (0, 1, m.clone()),
            (1, 1, Matrix::identity(k)),
        ],
    )
}

/// [`weyl_block_identity_check`] with an arbitrary matrix in place of the
/// interchange permutation, for negative controls.
pub fn weyl_block_identity_check_with(a: usize, b: usize, w: &Matrix<IQElement>) -> bool {
    let n = a + 2 * b;
    let arr = DoublingArrangement::extended(a, b);
    let embedded = match arr.embed(w, &Matrix::identity(n)) {
        Ok(m) => m,
        Err(_) => return false,
    };
    // First part of the identity: the interleaved embedding of the pair
    // (w, 1) is the plain block-diagonal matrix.
    let block_diag = place_blocks(
        &[n + 2, n],
        &[n + 2, n],
        &[(0, 0, w.clone()), (1, 1, Matrix::identity(n))],
    );
    if embedded != block_diag {
        return false;
    }

    // Second part: conjugation permutes the corner blocks of an
    // upper-unipotent matrix. Corner rows run (a, b, 1, b), columns
    // (b, 1, a, b); blocks outside the listed positions are zero.
    let mut next = 0usize;
    let blk_a = symbol_block(a, a, &mut next);
    let blk_b = symbol_block(a, b, &mut next);
    let blk_c = symbol_block(b, a, &mut next);
    let blk_d = symbol_block(b, b, &mut next);
    let blk_e = symbol_block(b, b, &mut next);
    let corner = place_blocks(
        &[a, b, 1, b],
        &[b, 1, a, b],
        &[
            (0, 2, blk_a.clone()),
            (0, 3, blk_b.clone()),
            (1, 2, blk_c.clone()),
            (1, 3, blk_d.clone()),
            (3, 0, blk_e.clone()),
        ],
    );
    let expected_corner = place_blocks(
        &[b, 1, a, b],
        &[b, 1, a, b],
        &[
            (0, 2, blk_c),
            (0, 3, blk_d),
            (2, 2, blk_a),
            (2, 3, blk_b),
            (3, 0, blk_e),
        ],
    );

    let g = upper_unipotent(&corner);
    let conjugator = crate::doubling::lift_poly(&embedded);
    let conjugated = conjugator.mul(&g).mul(&conjugator.transpose());
    conjugated == upper_unipotent(&expected_corner)
}

/// Verifies, with a fully symbolic corner block, that conjugating an
/// upper-unipotent matrix by the embedded interchange permutation rearranges
/// the corner's five blocks into the displaced pattern — and that the
/// embedding coincides with the plain block-diagonal extension.
pub fn weyl_block_identity_check(a: usize, b: usize) -> bool {
    weyl_block_identity_check_with(a, b, &interchange_weyl(a, b))
}
