//! Skew-Hermitian forms, similitude groups, and transport of forms.
//!
//! The form of signature `(r, s)` is the block matrix
//! `[[0, 0, 1_s], [0, zeta, 0], [-1_s, 0, 0]]` with `zeta` a diagonal purely
//! imaginary matrix of size `r - s`; for `r = s` it degenerates to the
//! standard doubled form `[[0, 1_s], [-1_s, 0]]`. A matrix `g` belongs to
//! the similitude group of a form `theta` when `g* theta g = mu(g) theta`
//! for a scalar `mu(g)`, and conjugation by a fixed matrix `S` carries the
//! group of one form into the group of another exactly when `S* theta_src S`
//! is a nonzero scalar multiple of `theta_dst` — which is what
//! [`conjugation_transport_check`] verifies, with no inversion anywhere.

use core_arith::{Conjugate, Field, MPoly, Matrix, Rational, Ring};
use serde::Serialize;

use crate::iq::IQElement;
use crate::UmatError;

/// Assembles a matrix from sparse block coordinates: `blocks` lists
/// `(block_row, block_col, matrix)` triples on the grid defined by the two
/// size lists; unlisted blocks are zero.
pub fn place_blocks<T: Ring>(
    row_sizes: &[usize],
    col_sizes: &[usize],
    blocks: &[(usize, usize, Matrix<T>)],
) -> Matrix<T> {
    let offsets = |sizes: &[usize]| {
        let mut acc = 0usize;
        let mut out = Vec::with_capacity(sizes.len());
        for &s in sizes {
            out.push(acc);
            acc += s;
        }
        (out, acc)
    };
    let (row_off, rows) = offsets(row_sizes);
    let (col_off, cols) = offsets(col_sizes);
    let mut out = Matrix::zeros(rows, cols);
    for (bi, bj, m) in blocks {
        assert_eq!(m.nrows(), row_sizes[*bi], "block height mismatch at block row {bi}");
        assert_eq!(m.ncols(), col_sizes[*bj], "block width mismatch at block column {bj}");
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                out.set(row_off[*bi] + i, col_off[*bj] + j, m.get(i, j).clone());
            }
        }
    }
    out
}

/// Matrix of fresh polynomial indeterminates, numbered row-major from
/// `*next`, which advances past them.
pub fn symbol_block(rows: usize, cols: usize, next: &mut usize) -> Matrix<MPoly<IQElement>> {
    let start = *next;
    *next += rows * cols;
    Matrix::from_fn(rows, cols, |i, j| MPoly::var(start + i * cols + j))
}

/// Diagonal matrix with the given entries.
pub fn diagonal_matrix(entries: &[IQElement]) -> Matrix<IQElement> {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { IQElement::zero() })
}

/// `c` times the identity of size `k`.
pub fn scaled_identity(k: usize, c: &IQElement) -> Matrix<IQElement> {
    Matrix::<IQElement>::identity(k).scalar_mul(c)
}

/// Validates diagonal entries for a skew form: purely imaginary and nonzero,
/// and — for Gaussian entries, where the comparison is meaningful — with
/// positive imaginary part, so that the form has the definite middle block
/// every construction here assumes.
pub fn validate_zeta(zeta: &[IQElement], expected_len: usize) -> Result<(), UmatError> {
    if zeta.len() != expected_len {
        return Err(UmatError::Dimension(format!(
            "expected {expected_len} diagonal entries, got {}",
            zeta.len()
        )));
    }
    for (j, z) in zeta.iter().enumerate() {
        if !z.re().is_zero() || z.im().is_zero() {
            return Err(UmatError::Form(format!(
                "diagonal entry {j} must be purely imaginary and nonzero, got {z}"
            )));
        }
        if z.discriminant() == 1 && z.im().is_negative() {
            return Err(UmatError::Form(format!(
                "Gaussian diagonal entry {j} must have positive imaginary part, got {z}"
            )));
        }
    }
    Ok(())
}

/// The skew form of signature `(r, s)`:
/// `[[0, 0, 1_s], [0, zeta, 0], [-1_s, 0, 0]]` with `zeta` diagonal of size
/// `r - s`.
pub fn signature_form(
    r: usize,
    s: usize,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    if r < s {
        return Err(UmatError::Dimension(format!("signature needs r >= s, got ({r}, {s})")));
    }
    validate_zeta(zeta, r - s)?;
    let sizes = [s, r - s, s];
    let one = Matrix::<IQElement>::identity(s);
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 2, one.clone()),
            (1, 1, diagonal_matrix(zeta)),
            (2, 0, one.neg()),
        ],
    ))
}

/// The standard doubled form `[[0, 1_m], [-1_m, 0]]`.
pub fn standard_doubled_form(m: usize) -> Matrix<IQElement> {
    signature_form(m, m, &[]).expect("empty diagonal always validates")
}

/// Outcome of a similitude-group membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum GroupCheckReport {
    Member { similitude: IQElement },
    NotMember,
}

impl GroupCheckReport {
    pub fn is_member(&self) -> bool {
        matches!(self, GroupCheckReport::Member { .. })
    }

    pub fn similitude(&self) -> Option<&IQElement> {
        match self {
            GroupCheckReport::Member { similitude } => Some(similitude),
            GroupCheckReport::NotMember => None,
        }
    }
}

/// Tests `g* theta g = mu theta` and reports the similitude scalar `mu`.
pub fn group_membership(
    g: &Matrix<IQElement>,
    theta: &Matrix<IQElement>,
) -> Result<GroupCheckReport, UmatError> {
    let n = theta.nrows();
    if !theta.is_square() || !g.is_square() || g.nrows() != n {
        return Err(UmatError::Dimension(format!(
            "membership needs square matrices of one size, got {}x{} against {}x{}",
            g.nrows(),
            g.ncols(),
            theta.nrows(),
            theta.ncols()
        )));
    }
    let t = g.adjoint().mul(theta).mul(g);
    let Some((i, j)) = first_nonzero(theta) else {
        return Err(UmatError::Form("the zero matrix is not a form".into()));
    };
    let mu = t.get(i, j).mul(&theta.get(i, j).inv().expect("pivot entry is nonzero"));
    if mu.is_zero() || t != theta.scalar_mul(&mu) {
        return Ok(GroupCheckReport::NotMember);
    }
    Ok(GroupCheckReport::Member { similitude: mu })
}

fn first_nonzero<T: Ring>(m: &Matrix<T>) -> Option<(usize, usize)> {
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if !m.get(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// When `a = c * b` for a nonzero scalar `c`, returns `c` as the exact pair
/// `(numerator, denominator)`; `None` otherwise. Works over any integral
/// domain: proportionality is tested by cross-multiplication, never by
/// division.
pub fn proportionality<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Option<(T, T)> {
    assert_eq!(a.nrows(), b.nrows(), "proportionality needs equal shapes");
    assert_eq!(a.ncols(), b.ncols(), "proportionality needs equal shapes");
    let (i, j) = first_nonzero(b)?;
    let den = b.get(i, j).clone();
    let num = a.get(i, j).clone();
    if num.is_zero() {
        return None;
    }
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if a.get(i, j).mul(&den) != num.mul(b.get(i, j)) {
                return None;
            }
        }
    }
    Some((num, den))
}

/// The scalar pair from `s* theta_src s = c * theta_dst`, when it exists.
/// A `Some` answer means conjugation `u -> s^{-1} u s` carries the
/// similitude group of `theta_src` into that of `theta_dst`.
pub fn transport_ratio<T: Ring + Conjugate>(
    s: &Matrix<T>,
    theta_src: &Matrix<T>,
    theta_dst: &Matrix<T>,
) -> Option<(T, T)> {
    let t = s.adjoint().mul(theta_src).mul(s);
    proportionality(&t, theta_dst)
}

/// [`transport_ratio`] over an imaginary quadratic field, with the ratio
/// resolved to a single scalar.
pub fn conjugation_transport_check(
    s: &Matrix<IQElement>,
    theta_src: &Matrix<IQElement>,
    theta_dst: &Matrix<IQElement>,
) -> Option<IQElement> {
    let (num, den) = transport_ratio(s, theta_src, theta_dst)?;
    Some(num.mul(&den.inv().expect("denominator entry is nonzero")))
}

// ---------------------------------------------------------------------------
// Members of the similitude group of `signature_form(r, s, zeta)`, used to
// sample the groups in tests. Block sizes are `(s, a, s)` with `a = r - s`.
// ---------------------------------------------------------------------------

/// `diag(A, B, (A*)^{-1})` with `B* zeta B = zeta`; similitude 1.
pub fn levi_member(
    a_block: &Matrix<IQElement>,
    b_block: &Matrix<IQElement>,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    let s = a_block.nrows();
    if !a_block.is_square() || !b_block.is_square() {
        return Err(UmatError::Dimension("Levi blocks must be square".into()));
    }
    validate_zeta(zeta, b_block.nrows())?;
    let z = diagonal_matrix(zeta);
    if b_block.adjoint().mul(&z).mul(b_block) != z {
        return Err(UmatError::Form("middle Levi block must preserve the diagonal part".into()));
    }
    let a_inv_adj = a_block
        .adjoint()
        .inverse()
        .ok_or_else(|| UmatError::Singular("Levi block must be invertible".into()))?;
    Ok(place_blocks(
        &[s, zeta.len(), s],
        &[s, zeta.len(), s],
        &[(0, 0, a_block.clone()), (1, 1, b_block.clone()), (2, 2, a_inv_adj)],
    ))
}

/// `[[1, 0, T], [0, 1, 0], [0, 0, 1]]` with `T` Hermitian; similitude 1.
pub fn corner_unipotent(t: &Matrix<IQElement>, a: usize) -> Result<Matrix<IQElement>, UmatError> {
    let s = t.nrows();
    if !t.is_square() {
        return Err(UmatError::Dimension("corner block must be square".into()));
    }
    if t.adjoint() != *t {
        return Err(UmatError::Form("corner block must be Hermitian".into()));
    }
    let sizes = [s, a, s];
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, Matrix::identity(s)),
            (0, 2, t.clone()),
            (1, 1, Matrix::identity(a)),
            (2, 2, Matrix::identity(s)),
        ],
    ))
}

/// `[[1, m* zeta, h + m* zeta m / 2], [0, 1, m], [0, 0, 1]]` with `h`
/// Hermitian and `m` arbitrary of shape `(r - s) x s`; similitude 1.
pub fn full_unipotent(
    m: &Matrix<IQElement>,
    h: &Matrix<IQElement>,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    let s = h.nrows();
    validate_zeta(zeta, m.nrows())?;
    if !h.is_square() || m.ncols() != s {
        return Err(UmatError::Dimension("unipotent blocks must have shapes s x s and a x s".into()));
    }
    if h.adjoint() != *h {
        return Err(UmatError::Form("corner summand must be Hermitian".into()));
    }
    let z = diagonal_matrix(zeta);
    let q = m.adjoint().mul(&z);
    let half = IQElement::from_ratio(1, 2);
    let p = h.add(&q.mul(m).scalar_mul(&half));
    let sizes = [s, zeta.len(), s];
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, Matrix::identity(s)),
            (0, 1, q),
            (0, 2, p),
            (1, 1, Matrix::identity(zeta.len())),
            (1, 2, m.clone()),
            (2, 2, Matrix::identity(s)),
        ],
    ))
}

/// The Weyl element `[[0, 0, -1], [0, 1, 0], [1, 0, 0]]`; similitude 1.
pub fn weyl_flip(s: usize, a: usize) -> Matrix<IQElement> {
    let sizes = [s, a, s];
    place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 2, Matrix::<IQElement>::identity(s).neg()),
            (1, 1, Matrix::identity(a)),
            (2, 0, Matrix::identity(s)),
        ],
    )
}

/// `diag(lambda^2, lambda, 1)` blockwise; similitude `lambda^2`.
pub fn similitude_scale(s: usize, a: usize, lambda: &Rational) -> Matrix<IQElement> {
    let l = IQElement::rational(lambda.clone());
    let sizes = [s, a, s];
    place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, scaled_identity(s, &l.mul(&l))),
            (1, 1, scaled_identity(a, &l)),
            (2, 2, Matrix::identity(s)),
        ],
    )
}
