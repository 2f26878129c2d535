//! The frame-mixing identity behind the half-space embedding: two outer
//! constant mixers turn the direct sum of the two small point frames into the
//! doubled point frame times a block-diagonal cofactor.
//!
//! Points carry symbolic complex coordinates. A coordinate and its complex
//! conjugate are independent symbols, kept as the variable pair `2k` /
//! `2k + 1`; [`conj_poly`] swaps each pair and conjugates coefficients, which
//! is exactly conjugation of the evaluated polynomial.

use core_arith::{Conjugate, MPoly, Matrix, Ring};

use crate::doubling::lift_poly;
use crate::forms::{diagonal_matrix, place_blocks, validate_zeta};
use crate::iq::IQElement;
use crate::UmatError;

/// Conjugate of a polynomial in paired variables: swaps each variable with
/// its partner and conjugates every coefficient. A ring homomorphism, so it
/// commutes with sums and products.
pub fn conj_poly(p: &MPoly<IQElement>) -> MPoly<IQElement> {
    p.rename_vars(|v| v ^ 1).map_coeffs(|c| c.conjugate())
}

/// Conjugate transpose of a matrix of paired-variable polynomials.
pub fn conj_transpose(m: &Matrix<MPoly<IQElement>>) -> Matrix<MPoly<IQElement>> {
    m.transpose().map(conj_poly)
}

/// A fresh `rows x cols` block of complex symbols: entry `(i, j)` is the
/// variable `2 * (start + i * cols + j)`, with `2 * k + 1` reserved for its
/// conjugate. Advances `next` by the number of symbols taken.
fn complex_symbol_block(rows: usize, cols: usize, next: &mut usize) -> Matrix<MPoly<IQElement>> {
    let start = *next;
    *next += rows * cols;
    Matrix::from_fn(rows, cols, |i, j| MPoly::var(2 * (start + i * cols + j)))
}

/// The frame matrix of a point `(x, y)` of the half-space with form diagonal
/// `zeta`: rows and columns split `(t, a, t)` for `x` of size `t x t` and `y`
/// of size `a x t`, with blocks
/// `[[x*, y*, x], [0, -zeta, y], [1, 0, 1]]`.
pub fn point_frame(
    x: &Matrix<MPoly<IQElement>>,
    y: &Matrix<MPoly<IQElement>>,
    zeta: &[IQElement],
) -> Matrix<MPoly<IQElement>> {
    let t = x.nrows();
    assert!(x.is_square(), "x must be square");
    let a = zeta.len();
    assert_eq!(y.nrows(), a);
    assert_eq!(y.ncols(), t);
    let sizes = [t, a, t];
    place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, conj_transpose(x)),
            (0, 1, conj_transpose(y)),
            (0, 2, x.clone()),
            (1, 1, lift_poly(&diagonal_matrix(zeta)).neg()),
            (1, 2, y.clone()),
            (2, 0, Matrix::identity(t)),
            (2, 2, Matrix::identity(t)),
        ],
    )
}

/// The image of the point pair `((x, y), (u, v))` in the doubled half-space:
/// rows and columns split `(s+1, a, s)`, with blocks
/// `[[x, 0, 0], [y, zeta/2, 0], [-v* zeta^{-1} y, -v*, -u*]]`.
pub fn domain_embedding(
    x: &Matrix<MPoly<IQElement>>,
    y: &Matrix<MPoly<IQElement>>,
    u: &Matrix<MPoly<IQElement>>,
    v: &Matrix<MPoly<IQElement>>,
    zeta: &[IQElement],
) -> Matrix<MPoly<IQElement>> {
    let s1 = x.nrows();
    let s = u.nrows();
    let a = zeta.len();
    assert_eq!(s1, s + 1, "x must be one size larger than u");
    assert_eq!((y.nrows(), y.ncols()), (a, s1));
    assert_eq!((v.nrows(), v.ncols()), (a, s));
    let half = IQElement::from_ratio(1, 2);
    let zeta_half: Vec<IQElement> = zeta.iter().map(|z| z.mul(&half)).collect();
    let zeta_inv: Vec<IQElement> = zeta
        .iter()
        .map(|z| z.inverse().expect("validated diagonal entries are nonzero"))
        .collect();
    let v_star = conj_transpose(v);
    place_blocks(
        &[s1, a, s],
        &[s1, a, s],
        &[
            (0, 0, x.clone()),
            (1, 0, y.clone()),
            (1, 1, lift_poly(&diagonal_matrix(&zeta_half))),
            (2, 0, v_star.mul(&lift_poly(&diagonal_matrix(&zeta_inv))).mul(y).neg()),
            (2, 1, v_star.neg()),
            (2, 2, conj_transpose(u).neg()),
        ],
    )
}

/// The constant left mixer: rows split
/// `(s+1, r-s, s, s+1, r-s, s)`, columns `(s+1, r-s, s+1, s, r-s, s)`.
pub fn frame_mixer_left(r: usize, s: usize, zeta: &[IQElement]) -> Result<Matrix<IQElement>, UmatError> {
    if r < s {
        return Err(UmatError::Dimension("the signature needs r >= s".into()));
    }
    let a = r - s;
    validate_zeta(zeta, a)?;
    let half = IQElement::from_ratio(1, 2);
    let zeta_inv: Vec<IQElement> = zeta
        .iter()
        .map(|z| z.inverse().expect("validated diagonal entries are nonzero"))
        .collect();
    let half_a = Matrix::identity(a).scalar_mul(&half);
    Ok(place_blocks(
        &[s + 1, a, s, s + 1, a, s],
        &[s + 1, a, s + 1, s, a, s],
        &[
            (0, 0, Matrix::identity(s + 1)),
            (1, 1, half_a.clone()),
            (1, 4, half_a.neg()),
            (2, 3, Matrix::identity(s).neg()),
            (3, 2, Matrix::identity(s + 1)),
            (4, 1, diagonal_matrix(&zeta_inv).neg()),
            (4, 4, diagonal_matrix(&zeta_inv).neg()),
            (5, 5, Matrix::identity(s)),
        ],
    ))
}

/// The constant right mixer, a permutation: rows split `(r+1, s+1, r, s)`,
/// columns `(r+1, s, r, s+1)`. Its inverse is its transpose.
pub fn frame_mixer_right(r: usize, s: usize) -> Matrix<IQElement> {
    place_blocks(
        &[r + 1, s + 1, r, s],
        &[r + 1, s, r, s + 1],
        &[
            (0, 0, Matrix::identity(r + 1)),
            (1, 3, Matrix::identity(s + 1)),
            (2, 2, Matrix::identity(r)),
            (3, 1, Matrix::identity(s)),
        ],
    )
}

/// The base point of the product domain: `x = i 1_{s+1}`, `y = 0`,
/// `u = i 1_s`, `v = 0`, as an evaluation vector over the paired variables
/// allocated by [`rl_identity_check_with`] (in the order x, y, u, v).
fn base_point_values(r: usize, s: usize) -> Vec<IQElement> {
    let a = r - s;
    let total = (s + 1) * (s + 1) + a * (s + 1) + s * s + a * s;
    let mut vals = vec![IQElement::from_int(0); 2 * total];
    let i = IQElement::i();
    for p in 0..(s + 1) {
        let c = p * (s + 1) + p;
        vals[2 * c] = i.clone();
        vals[2 * c + 1] = i.conjugate();
    }
    let off = (s + 1) * (s + 1) + a * (s + 1);
    for p in 0..s {
        let c = off + p * s + p;
        vals[2 * c] = i.clone();
        vals[2 * c + 1] = i.conjugate();
    }
    vals
}

/// Verifies the mixing identity with a caller-supplied right mixer: over
/// fresh symbolic points `z = (x, y)` and `w = (u, v)` with `Z` the embedded
/// point, the matrix
/// `B(Z)^{-1} . left . diag[B(z), B(w)] . right`
/// must be block diagonal for the even split `(n+1 | n+1)`, `n = r+s` — the
/// first factor carries the `w`-data, the second the `z`-data. Runs
/// fraction-free: `B(Z)^{-1}` is `diag(adj D, adj D) . [[1, -Z], [-1, Z*]]`
/// up to the scalar `det D` with `D = Z* - Z`, so the off-diagonal blocks
/// vanish exactly when they vanish after that substitution. Fails with
/// [`UmatError::Singular`] if `det D` vanishes at the base point (it never
/// does for a valid `zeta`).
pub fn rl_identity_check_with(
    r: usize,
    s: usize,
    zeta: &[IQElement],
    right: &Matrix<IQElement>,
) -> Result<bool, UmatError> {
    if r < s {
        return Err(UmatError::Dimension("the signature needs r >= s".into()));
    }
    let a = r - s;
    validate_zeta(zeta, a)?;
    let n = r + s;

    let mut next = 0usize;
    let x = complex_symbol_block(s + 1, s + 1, &mut next);
    let y = complex_symbol_block(a, s + 1, &mut next);
    let u = complex_symbol_block(s, s, &mut next);
    let v = complex_symbol_block(a, s, &mut next);

    let big = domain_embedding(&x, &y, &u, &v, zeta);
    let big_star = conj_transpose(&big);
    let delta = big_star.sub(&big);
    let vals = base_point_values(r, s);
    if delta.map(|p| p.eval(&vals)).det().is_zero() {
        return Err(UmatError::Singular("embedded-point frame is singular at the base point".into()));
    }
    let adj = delta.adjugate();

    let frame_z = point_frame(&x, &y, zeta);
    let frame_w = point_frame(&u, &v, zeta);
    let stacked = place_blocks(
        &[n + 2, n],
        &[n + 2, n],
        &[(0, 0, frame_z), (1, 1, frame_w)],
    );
    let product = lift_poly(&frame_mixer_left(r, s, zeta)?)
        .mul(&stacked)
        .mul(&lift_poly(right));

    let m = n + 1;
    let unmixer = place_blocks(
        &[m, m],
        &[m, m],
        &[
            (0, 0, Matrix::identity(m)),
            (0, 1, big.neg()),
            (1, 0, Matrix::<MPoly<IQElement>>::identity(m).neg()),
            (1, 1, big_star),
        ],
    );
    let doubled_adj = place_blocks(&[m, m], &[m, m], &[(0, 0, adj.clone()), (1, 1, adj)]);
    let scaled = doubled_adj.mul(&unmixer).mul(&product);

    for i in 0..(2 * m) {
        for j in 0..(2 * m) {
            if (i < m) != (j < m) && !scaled.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`rl_identity_check_with`] with the standard right mixer.
pub fn rl_identity_check(r: usize, s: usize, zeta: &[IQElement]) -> Result<bool, UmatError> {
    rl_identity_check_with(r, s, zeta, &frame_mixer_right(r, s))
}

/// The same identity specialized to the base point, with a genuine matrix
/// inverse over exact scalars instead of the fraction-free route.
pub fn rl_base_point_check(r: usize, s: usize, zeta: &[IQElement]) -> Result<bool, UmatError> {
    if r < s {
        return Err(UmatError::Dimension("the signature needs r >= s".into()));
    }
    let a = r - s;
    validate_zeta(zeta, a)?;
    let n = r + s;
    let vals = base_point_values(r, s);

    let mut next = 0usize;
    let x = complex_symbol_block(s + 1, s + 1, &mut next);
    let y = complex_symbol_block(a, s + 1, &mut next);
    let u = complex_symbol_block(s, s, &mut next);
    let v = complex_symbol_block(a, s, &mut next);
    let at_base = |mat: &Matrix<MPoly<IQElement>>| -> Matrix<IQElement> { mat.map(|p| p.eval(&vals)) };

    let big = at_base(&domain_embedding(&x, &y, &u, &v, zeta));
    let doubled_frame = place_blocks(
        &[n + 1, n + 1],
        &[n + 1, n + 1],
        &[
            (0, 0, big.adjoint()),
            (0, 1, big),
            (1, 0, Matrix::identity(n + 1)),
            (1, 1, Matrix::identity(n + 1)),
        ],
    );
    let inverse = doubled_frame
        .inverse()
        .ok_or_else(|| UmatError::Singular("doubled frame is singular at the base point".into()))?;

    let stacked = place_blocks(
        &[n + 2, n],
        &[n + 2, n],
        &[
            (0, 0, at_base(&point_frame(&x, &y, zeta))),
            (1, 1, at_base(&point_frame(&u, &v, zeta))),
        ],
    );
    let product = inverse
        .mul(&frame_mixer_left(r, s, zeta)?)
        .mul(&stacked)
        .mul(&frame_mixer_right(r, s));

    let m = n + 1;
    for i in 0..(2 * m) {
        for j in 0..(2 * m) {
            if (i < m) != (j < m) && !product.get(i, j).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
