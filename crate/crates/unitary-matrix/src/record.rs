//! A recorded triple-product identity in the interleaved doubled coordinates
//! and the block factorization of the automorphy factor it produces.
//!
//! The middle factor is a generic matrix with the sparsity pattern of an
//! embedded pair, written with symbolic blocks; the outer factors are fixed
//! shears involving the form diagonal `zeta` and its inverse. The product has
//! a displayed closed form ([`record_product_check`]), whose lower quarters
//! make `C·t + D` block lower-triangular at the base point — so its
//! determinant splits into two smaller determinants
//! ([`automorphy_factorization_check`]).

use core_arith::{MPoly, Matrix, Ring};

use crate::doubling::{lift_poly, zeta_shear};
use crate::forms::{diagonal_matrix, place_blocks, symbol_block, validate_zeta};
use crate::iq::IQElement;
use crate::UmatError;

/// The three factors of the recorded product, its displayed value, and the
/// symbolic corner blocks needed downstream.
pub struct RecordMatrices {
    pub left: Matrix<MPoly<IQElement>>,
    pub middle: Matrix<MPoly<IQElement>>,
    pub right: Matrix<MPoly<IQElement>>,
    pub expected: Matrix<MPoly<IQElement>>,
    pub block_d: Matrix<MPoly<IQElement>>,
    pub block_e: Matrix<MPoly<IQElement>>,
    pub block_f: Matrix<MPoly<IQElement>>,
    pub block_g: Matrix<MPoly<IQElement>>,
    pub block_h: Matrix<MPoly<IQElement>>,
    pub block_j: Matrix<MPoly<IQElement>>,
}

/// Builds the factors and the displayed product value over fresh symbols.
pub fn record_matrices(a: usize, b: usize, zeta: &[IQElement]) -> Result<RecordMatrices, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b, 1, a, b, b, 1, a, b];
    let zl = lift_poly(&diagonal_matrix(zeta));
    let zeta_inv: Vec<IQElement> = zeta
        .iter()
        .map(|z| z.inverse().expect("validated diagonal entries are nonzero"))
        .collect();
    let zinv = lift_poly(&diagonal_matrix(&zeta_inv));
    let half = MPoly::constant(IQElement::from_ratio(1, 2));
    let neg_half = half.neg();
    let quarter = MPoly::constant(IQElement::from_ratio(1, 4));

    let left = {
        let ia = Matrix::<MPoly<IQElement>>::identity(a);
        place_blocks(
            &sizes,
            &sizes,
            &[
                (0, 0, Matrix::identity(b)),
                (1, 1, Matrix::identity(1)),
                (2, 2, ia.scalar_mul(&half)),
                (2, 6, ia.scalar_mul(&neg_half)),
                (3, 3, Matrix::identity(b)),
                (4, 4, Matrix::identity(b)),
                (5, 5, Matrix::identity(1)),
                (6, 2, zinv.neg()),
                (6, 6, zinv.neg()),
                (7, 7, Matrix::identity(b)),
            ],
        )
    };

    // Symbolic middle: a 3x3 grid over rows/columns (b, 1, a), side grids
    // over (b, 1), and nine corner blocks.
    let mut next = 0usize;
    let tri = [b, 1, a];
    let duo = [b, 1];
    let mut grid_a = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            grid_a.push(symbol_block(tri[i], tri[j], &mut next));
        }
    }
    let mut grid_b = Vec::new();
    for i in 0..3 {
        for j in 0..2 {
            grid_b.push(symbol_block(tri[i], duo[j], &mut next));
        }
    }
    let mut grid_c = Vec::new();
    for i in 0..2 {
        for j in 0..3 {
            grid_c.push(symbol_block(duo[i], tri[j], &mut next));
        }
    }
    let mut grid_d = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            grid_d.push(symbol_block(duo[i], duo[j], &mut next));
        }
    }
    let block_aa = symbol_block(b, b, &mut next);
    let block_bb = symbol_block(b, a, &mut next);
    let block_cc = symbol_block(b, b, &mut next);
    let block_d = symbol_block(a, b, &mut next);
    let block_e = symbol_block(a, a, &mut next);
    let block_f = symbol_block(a, b, &mut next);
    let block_g = symbol_block(b, b, &mut next);
    let block_h = symbol_block(b, a, &mut next);
    let block_j = symbol_block(b, b, &mut next);

    let mut middle_blocks = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            middle_blocks.push((i, j, grid_a[3 * i + j].clone()));
        }
        for j in 0..2 {
            middle_blocks.push((i, 4 + j, grid_b[2 * i + j].clone()));
        }
    }
    for i in 0..2 {
        for j in 0..3 {
            middle_blocks.push((4 + i, j, grid_c[3 * i + j].clone()));
        }
        for j in 0..2 {
            middle_blocks.push((4 + i, 4 + j, grid_d[2 * i + j].clone()));
        }
    }
    middle_blocks.push((3, 3, block_aa.clone()));
    middle_blocks.push((3, 6, block_bb.clone()));
    middle_blocks.push((3, 7, block_cc.clone()));
    middle_blocks.push((6, 3, block_d.clone()));
    middle_blocks.push((6, 6, block_e.clone()));
    middle_blocks.push((6, 7, block_f.clone()));
    middle_blocks.push((7, 3, block_g.clone()));
    middle_blocks.push((7, 6, block_h.clone()));
    middle_blocks.push((7, 7, block_j.clone()));
    let middle = place_blocks(&sizes, &sizes, &middle_blocks);

    let right = lift_poly(&zeta_shear(a, b, zeta)?);

    let shear = |m: &Matrix<MPoly<IQElement>>| m.mul(&zl).scalar_mul(&neg_half);
    let expected = place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, grid_a[0].clone()),
            (0, 1, grid_a[1].clone()),
            (0, 2, grid_a[2].clone()),
            (0, 4, grid_b[0].clone()),
            (0, 5, grid_b[1].clone()),
            (0, 6, shear(&grid_a[2])),
            (1, 0, grid_a[3].clone()),
            (1, 1, grid_a[4].clone()),
            (1, 2, grid_a[5].clone()),
            (1, 4, grid_b[2].clone()),
            (1, 5, grid_b[3].clone()),
            (1, 6, shear(&grid_a[5])),
            (2, 0, grid_a[6].scalar_mul(&half)),
            (2, 1, grid_a[7].scalar_mul(&half)),
            (2, 2, grid_a[8].add(&block_e).scalar_mul(&half)),
            (2, 3, block_d.scalar_mul(&neg_half)),
            (2, 4, grid_b[4].scalar_mul(&half)),
            (2, 5, grid_b[5].scalar_mul(&half)),
            (2, 6, block_e.sub(&grid_a[8]).mul(&zl).scalar_mul(&quarter)),
            (2, 7, block_f.scalar_mul(&neg_half)),
            (3, 2, block_bb.neg()),
            (3, 3, block_aa.clone()),
            (3, 6, shear(&block_bb)),
            (3, 7, block_cc.clone()),
            (4, 0, grid_c[0].clone()),
            (4, 1, grid_c[1].clone()),
            (4, 2, grid_c[2].clone()),
            (4, 4, grid_d[0].clone()),
            (4, 5, grid_d[1].clone()),
            (4, 6, shear(&grid_c[2])),
            (5, 0, grid_c[3].clone()),
            (5, 1, grid_c[4].clone()),
            (5, 2, grid_c[5].clone()),
            (5, 4, grid_d[2].clone()),
            (5, 5, grid_d[3].clone()),
            (5, 6, shear(&grid_c[5])),
            (6, 0, zinv.mul(&grid_a[6]).neg()),
            (6, 1, zinv.mul(&grid_a[7]).neg()),
            (6, 2, zinv.mul(&block_e.sub(&grid_a[8]))),
            (6, 3, zinv.mul(&block_d).neg()),
            (6, 4, zinv.mul(&grid_b[4]).neg()),
            (6, 5, zinv.mul(&grid_b[5]).neg()),
            (6, 6, zinv.mul(&grid_a[8].add(&block_e)).mul(&zl).scalar_mul(&half)),
            (6, 7, zinv.mul(&block_f).neg()),
            (7, 2, block_h.neg()),
            (7, 3, block_g.clone()),
            (7, 6, shear(&block_h)),
            (7, 7, block_j.clone()),
        ],
    );

    Ok(RecordMatrices {
        left,
        middle,
        right,
        expected,
        block_d,
        block_e,
        block_f,
        block_g,
        block_h,
        block_j,
    })
}

/// Whether the triple product equals its displayed value, as an identity in
/// the symbolic blocks.
pub fn record_product_check(a: usize, b: usize, zeta: &[IQElement]) -> Result<bool, UmatError> {
    let rm = record_matrices(a, b, zeta)?;
    Ok(rm.left.mul(&rm.middle).mul(&rm.right) == rm.expected)
}

/// The base point `diag(i·1_b, i, zeta/2, i·1_b)` of the half-space acted on
/// by matrices of the recorded product's size.
pub fn record_base_point(a: usize, b: usize, zeta: &[IQElement]) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let i = IQElement::i();
    let mut entries: Vec<IQElement> = vec![i.clone(); b + 1];
    let half = IQElement::from_ratio(1, 2);
    entries.extend(zeta.iter().map(|z| z.mul(&half)));
    entries.extend(std::iter::repeat(i).take(b));
    Ok(diagonal_matrix(&entries))
}

/// Verifies the displayed factorization of `det(C·t + D)` for the recorded
/// product `g = [[A, B], [C, D]]` at the base point `t`: the matrix
/// `C·t + D` is block lower-triangular for the split `(b+1 | a+b)`, and its
/// determinant equals the product of the leading minor with the determinant
/// of the displayed trailing factor (the trailing block with both
/// off-diagonal signs flipped, which leaves the determinant unchanged).
pub fn automorphy_factorization_check(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<bool, UmatError> {
    let rm = record_matrices(a, b, zeta)?;
    let g = rm.left.mul(&rm.middle).mul(&rm.right);
    if g != rm.expected {
        return Ok(false);
    }
    let n1 = a + 2 * b + 1;
    let c = g.block(n1, 0, n1, n1);
    let d = g.block(n1, n1, n1, n1);
    let t = lift_poly(&record_base_point(a, b, zeta)?);
    let m = c.mul(&t).add(&d);

    for i in 0..(b + 1) {
        for j in (b + 1)..n1 {
            if !m.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }

    let leading = m.block(0, 0, b + 1, b + 1).det();
    let zl = lift_poly(&diagonal_matrix(zeta));
    let zeta_inv: Vec<IQElement> = zeta
        .iter()
        .map(|z| z.inverse().expect("validated diagonal entries are nonzero"))
        .collect();
    let zinv = lift_poly(&diagonal_matrix(&zeta_inv));
    let i_lift = MPoly::constant(IQElement::i());
    let trailing = place_blocks(
        &[a, b],
        &[a, b],
        &[
            (0, 0, zinv.mul(&rm.block_e).mul(&zl)),
            (0, 1, zinv.mul(&rm.block_d.scalar_mul(&i_lift).add(&rm.block_f))),
            (1, 0, rm.block_h.mul(&zl)),
            (1, 1, rm.block_g.scalar_mul(&i_lift).add(&rm.block_j)),
        ],
    )
    .det();
    Ok(m.det() == leading.mul(&trailing))
}
