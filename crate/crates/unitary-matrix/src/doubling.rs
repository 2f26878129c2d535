//! Doubling embeddings and the transition matrices between coordinate systems.
//!
//! Two groups of sizes `n + 2` and `n` (with `n = a + 2b`) embed jointly into
//! a group of size `2n + 2`. The embedding interleaves the coordinates of the
//! two factors; a [`DoublingArrangement`] records which consecutive runs of
//! the big space come from which factor, and [`DoublingArrangement::embed`]
//! places a pair of matrices accordingly, entrywise-conjugating the second
//! factor. Transition matrices (`main_transition`, `mixed_transition`,
//! `diagonal_transition`, …) carry the interleaved or mixed coordinates onto
//! the standard split form; their defining property is checked by
//! [`crate::forms::conjugation_transport_check`].
//!
//! The transition built by [`diagonal_transition`] has entries in the ring
//! extension by `sqrt(2)`, represented as polynomials in the variable
//! [`SQRT2_VAR`] with the reduction `sqrt(2)^2 = 2` applied by
//! [`reduce_root2`].

use core_arith::{Conjugate, Matrix, MPoly, Rational, Ring};

use crate::forms::{
    diagonal_matrix, place_blocks, proportionality, scaled_identity, validate_zeta,
};
use crate::iq::IQElement;
use crate::UmatError;

/// The polynomial variable standing for `sqrt(2)`.
pub const SQRT2_VAR: usize = 0;

/// How the coordinates of two factor spaces interleave inside a doubled
/// space. Each piece `(from_second, offset, len)` says: the next `len`
/// coordinates of the big space are coordinates `offset..offset + len` of the
/// second (when `from_second`) or first factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingArrangement {
    pieces: Vec<(bool, usize, usize)>,
    size_first: usize,
    size_second: usize,
}

impl DoublingArrangement {
    fn new(pieces: Vec<(bool, usize, usize)>, size_first: usize, size_second: usize) -> Self {
        let arr = DoublingArrangement { pieces, size_first, size_second };
        let map = arr.coordinate_map();
        assert_eq!(map.len(), size_first + size_second, "pieces must fill the doubled space");
        let mut seen_first = vec![false; size_first];
        let mut seen_second = vec![false; size_second];
        for &(from_second, idx) in &map {
            let seen = if from_second { &mut seen_second } else { &mut seen_first };
            assert!(!seen[idx], "factor coordinate used twice");
            seen[idx] = true;
        }
        arr
    }

    /// Interleaving used with [`main_transition`]: block sizes
    /// `(b, 1, a, b | b, 1, a, b)` drawn from factors of sizes `n + 2` and
    /// `n`.
    pub fn extended(a: usize, b: usize) -> Self {
        let n = a + 2 * b;
        DoublingArrangement::new(
            vec![
                (false, 0, b),
                (false, b, 1),
                (false, b + 1, a),
                (true, 0, b),
                (false, b + 1 + a, b),
                (false, n + 1, 1),
                (true, b, a),
                (true, b + a, b),
            ],
            n + 2,
            n,
        )
    }

    /// Interleaving used with [`main_transition_plain`]: block sizes
    /// `(b, a, b | b, a, b)` drawn from two factors of size `n`.
    pub fn plain(a: usize, b: usize) -> Self {
        let n = a + 2 * b;
        DoublingArrangement::new(
            vec![
                (false, 0, b),
                (false, b, a),
                (true, 0, b),
                (false, b + a, b),
                (true, b, a),
                (true, b + a, b),
            ],
            n,
            n,
        )
    }

    /// Interleaving used with [`mixed_transition`]: block sizes
    /// `(b+1, a, b | b+1, a, b)` drawn from factors of sizes `n + 2` and `n`.
    pub fn mixed(a: usize, b: usize) -> Self {
        let n = a + 2 * b;
        DoublingArrangement::new(
            vec![
                (false, 0, b + 1),
                (false, b + 1, a),
                (true, 0, b),
                (false, b + 1 + a, b + 1),
                (true, b, a),
                (true, b + a, b),
            ],
            n + 2,
            n,
        )
    }

    /// Sizes `(first, second)` of the two factor spaces.
    pub fn factor_sizes(&self) -> (usize, usize) {
        (self.size_first, self.size_second)
    }

    /// Size of the doubled space.
    pub fn total(&self) -> usize {
        self.size_first + self.size_second
    }

    /// For every coordinate of the doubled space: which factor it comes from
    /// and at which index there.
    pub fn coordinate_map(&self) -> Vec<(bool, usize)> {
        let mut map = Vec::with_capacity(self.size_first + self.size_second);
        for &(from_second, offset, len) in &self.pieces {
            for k in 0..len {
                map.push((from_second, offset + k));
            }
        }
        map
    }

    /// The joint embedding of a pair of matrices: entries of `g` land on the
    /// first-factor coordinates, entries of the entrywise conjugate of `h` on
    /// the second-factor coordinates, zeros in between.
    pub fn embed(
        &self,
        g: &Matrix<IQElement>,
        h: &Matrix<IQElement>,
    ) -> Result<Matrix<IQElement>, UmatError> {
        if g.nrows() != self.size_first || g.ncols() != self.size_first {
            return Err(UmatError::Dimension(format!(
                "first factor must be {0}x{0}, got {1}x{2}",
                self.size_first,
                g.nrows(),
                g.ncols()
            )));
        }
        if h.nrows() != self.size_second || h.ncols() != self.size_second {
            return Err(UmatError::Dimension(format!(
                "second factor must be {0}x{0}, got {1}x{2}",
                self.size_second,
                h.nrows(),
                h.ncols()
            )));
        }
        let map = self.coordinate_map();
        Ok(Matrix::from_fn(self.total(), self.total(), |i, j| {
            let (fi, ii) = map[i];
            let (fj, jj) = map[j];
            if fi != fj {
                IQElement::zero()
            } else if fi {
                h.get(ii, jj).conjugate()
            } else {
                g.get(ii, jj).clone()
            }
        }))
    }

    /// [`DoublingArrangement::embed`] with the contract that both inputs are
    /// members of the groups of the given forms; rejects non-members.
    pub fn embed_members(
        &self,
        g: &Matrix<IQElement>,
        h: &Matrix<IQElement>,
        theta_first: &Matrix<IQElement>,
        theta_second: &Matrix<IQElement>,
    ) -> Result<Matrix<IQElement>, UmatError> {
        let ok_g = crate::forms::group_membership(g, theta_first)?.is_member();
        let ok_h = crate::forms::group_membership(h, theta_second)?.is_member();
        if !ok_g || !ok_h {
            return Err(UmatError::NotInGroup);
        }
        self.embed(g, h)
    }

    /// The form preserved by every [`DoublingArrangement::embed`] image of a
    /// pair of members with equal similitude: the interleave of the first
    /// form with the entrywise conjugate of the second.
    pub fn assembled_form(
        &self,
        theta_first: &Matrix<IQElement>,
        theta_second: &Matrix<IQElement>,
    ) -> Result<Matrix<IQElement>, UmatError> {
        self.embed(theta_first, theta_second)
    }
}

/// Diagonal with entries `2(j+1)^2 i`: distinct, purely imaginary, with the
/// squares arranged so a real positive square root of `entry / 2i` exists.
pub fn canonical_zeta(a: usize) -> Vec<IQElement> {
    (0..a)
        .map(|j| {
            let y = 2 * (j as i64 + 1) * (j as i64 + 1);
            IQElement::gauss_int(0, y)
        })
        .collect()
}

/// Diagonal with every entry `i`. This is the diagonal for which the
/// mixed-coordinate transitions transport forms onto exact scalar multiples;
/// for other diagonals the middle sector picks up a non-scalar factor.
pub fn unit_zeta(a: usize) -> Vec<IQElement> {
    vec![IQElement::i(); a]
}

/// The positive real diagonal `tau` with `i * tau^{-2}` equal to
/// [`unit_zeta`], i.e. all ones.
pub fn unit_tau(a: usize) -> Vec<Rational> {
    vec![Rational::from_int(1); a]
}

fn half() -> IQElement {
    IQElement::from_ratio(1, 2)
}

fn neg_half_zeta(zeta: &[IQElement]) -> Matrix<IQElement> {
    diagonal_matrix(zeta).scalar_mul(&half()).neg()
}

/// Transition from the interleaved coordinates of
/// [`DoublingArrangement::extended`] onto the standard split: block pattern
/// `(b, 1, a, b | b, 1, a, b)` with shears by `zeta / 2` and `1/2` corners.
pub fn main_transition(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b, 1, a, b, b, 1, a, b];
    let ib = Matrix::<IQElement>::identity(b);
    let ia = Matrix::<IQElement>::identity(a);
    let hb = ib.scalar_mul(&half());
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, ib.clone()),
            (0, 7, hb.neg()),
            (1, 1, Matrix::identity(1)),
            (2, 2, ia.clone()),
            (2, 6, neg_half_zeta(zeta)),
            (3, 3, ib.neg()),
            (3, 4, hb.clone()),
            (4, 3, ib.clone()),
            (4, 4, hb.clone()),
            (5, 5, Matrix::identity(1)),
            (6, 2, ia.neg()),
            (6, 6, neg_half_zeta(zeta)),
            (7, 0, ib.neg()),
            (7, 7, hb.neg()),
        ],
    ))
}

/// Shear factor of [`main_transition`] carrying the `zeta` part: the product
/// with [`half_shear`] recovers [`main_transition`] exactly.
pub fn zeta_shear(a: usize, b: usize, zeta: &[IQElement]) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b, 1, a, b, b, 1, a, b];
    let ib = Matrix::<IQElement>::identity(b);
    let ia = Matrix::<IQElement>::identity(a);
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, ib.clone()),
            (1, 1, Matrix::identity(1)),
            (2, 2, ia.clone()),
            (2, 6, neg_half_zeta(zeta)),
            (3, 3, ib.clone()),
            (4, 4, ib.clone()),
            (5, 5, Matrix::identity(1)),
            (6, 2, ia.neg()),
            (6, 6, neg_half_zeta(zeta)),
            (7, 7, ib),
        ],
    ))
}

/// Shear factor of [`main_transition`] carrying the `1/2` corners.
pub fn half_shear(a: usize, b: usize) -> Matrix<IQElement> {
    let sizes = [b, 1, a, b, b, 1, a, b];
    let ib = Matrix::<IQElement>::identity(b);
    let ia = Matrix::<IQElement>::identity(a);
    let hb = ib.scalar_mul(&half());
    place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, ib.clone()),
            (0, 7, hb.neg()),
            (1, 1, Matrix::identity(1)),
            (2, 2, ia.clone()),
            (3, 3, ib.neg()),
            (3, 4, hb.clone()),
            (4, 3, ib.clone()),
            (4, 4, hb.clone()),
            (5, 5, Matrix::identity(1)),
            (6, 6, ia),
            (7, 0, ib.neg()),
            (7, 7, hb.neg()),
        ],
    )
}

/// Whether [`main_transition`] equals the product of [`zeta_shear`] with
/// [`half_shear`].
pub fn main_transition_factors_check(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<bool, UmatError> {
    let s = main_transition(a, b, zeta)?;
    let left = zeta_shear(a, b, zeta)?;
    Ok(left.mul(&half_shear(a, b)) == s)
}

/// Transition from the interleaved coordinates of
/// [`DoublingArrangement::plain`] onto the standard split: block pattern
/// `(b, a, b | b, a, b)`.
pub fn main_transition_plain(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b, a, b, b, a, b];
    let ib = Matrix::<IQElement>::identity(b);
    let ia = Matrix::<IQElement>::identity(a);
    let hb = ib.scalar_mul(&half());
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, ib.clone()),
            (0, 5, hb.neg()),
            (1, 1, ia.clone()),
            (1, 4, neg_half_zeta(zeta)),
            (2, 2, ib.neg()),
            (2, 3, hb.clone()),
            (3, 2, ib.clone()),
            (3, 3, hb.clone()),
            (4, 1, ia.neg()),
            (4, 4, neg_half_zeta(zeta)),
            (5, 0, ib.neg()),
            (5, 5, hb.neg()),
        ],
    ))
}

/// Transition from the mixed doubled coordinates onto the standard split:
/// block pattern `(b+1, a, b | b+1, a, b)`; conjugation by it carries the
/// group of [`mixed_doubled_form`] onto the group of the standard form.
pub fn mixed_transition(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b + 1, a, b, b + 1, a, b];
    let ia = Matrix::<IQElement>::identity(a);
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, Matrix::identity(b + 1)),
            (1, 1, ia.clone()),
            (1, 4, neg_half_zeta(zeta)),
            (2, 2, Matrix::identity(b)),
            (3, 3, Matrix::identity(b + 1)),
            (4, 1, ia.neg()),
            (4, 4, neg_half_zeta(zeta)),
            (5, 5, Matrix::identity(b)),
        ],
    ))
}

/// The doubled form in mixed coordinates: block pattern
/// `(b+1, a, b | b+1, a, b)` with identity corners and `±zeta` middles. It
/// equals the assembled form of [`DoublingArrangement::mixed`].
pub fn mixed_doubled_form(
    a: usize,
    b: usize,
    zeta: &[IQElement],
) -> Result<Matrix<IQElement>, UmatError> {
    validate_zeta(zeta, a)?;
    let sizes = [b + 1, a, b, b + 1, a, b];
    let z = diagonal_matrix(zeta);
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 3, Matrix::identity(b + 1)),
            (1, 1, z.clone()),
            (2, 5, Matrix::identity(b)),
            (3, 0, Matrix::<IQElement>::identity(b + 1).neg()),
            (4, 4, z.neg()),
            (5, 2, Matrix::<IQElement>::identity(b).neg()),
        ],
    ))
}

/// The definite diagonal doubled form `i * diag(1_{n+1}, -1_{n+1})` written
/// in the mixed block pattern.
pub fn diagonal_doubled_form(a: usize, b: usize) -> Matrix<IQElement> {
    let sizes = [b + 1, a, b, b + 1, a, b];
    let i = IQElement::i();
    let neg_i = i.neg();
    place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, scaled_identity(b + 1, &i)),
            (1, 1, scaled_identity(a, &i)),
            (2, 2, scaled_identity(b, &i)),
            (3, 3, scaled_identity(b + 1, &neg_i)),
            (4, 4, scaled_identity(a, &neg_i)),
            (5, 5, scaled_identity(b, &neg_i)),
        ],
    )
}

/// Transition from the mixed doubled coordinates onto the coordinates of the
/// definite diagonal form, with entries in the extension by `sqrt(2)`:
/// corners carry `1/sqrt(2)` and `i/sqrt(2)`, the middles carry the inverse
/// of the positive real diagonal `tau`. The transport onto
/// [`mixed_doubled_form`] is an exact scalar exactly when `i * tau^{-2}`
/// equals the form diagonal, which for [`unit_zeta`] means [`unit_tau`].
pub fn diagonal_transition(
    a: usize,
    b: usize,
    tau: &[Rational],
) -> Result<Matrix<MPoly<IQElement>>, UmatError> {
    if tau.len() != a {
        return Err(UmatError::Dimension(format!(
            "expected {a} diagonal entries, got {}",
            tau.len()
        )));
    }
    for (j, t) in tau.iter().enumerate() {
        if t.is_zero() || t.is_negative() {
            return Err(UmatError::Form(format!(
                "diagonal entry {j} must be a positive rational, got {t}"
            )));
        }
    }
    // 1/sqrt(2) = sqrt(2)/2 as a polynomial in the root variable.
    let inv_root2 = MPoly::term(IQElement::from_ratio(1, 2), vec![1]);
    let neg_inv_root2 = inv_root2.neg();
    let neg_i_inv_root2 = inv_root2.scalar_mul(&IQElement::i().neg());
    let tau_inv = Matrix::from_fn(a, a, |i, j| {
        if i == j {
            MPoly::constant(IQElement::rational(
                tau[i].inv().expect("positive entry inverts"),
            ))
        } else {
            MPoly::zero()
        }
    });
    let corner = |c: &MPoly<IQElement>, k: usize| {
        Matrix::<MPoly<IQElement>>::identity(k).scalar_mul(c)
    };
    let sizes = [b + 1, a, b, b + 1, a, b];
    Ok(place_blocks(
        &sizes,
        &sizes,
        &[
            (0, 0, corner(&inv_root2, b + 1)),
            (0, 3, corner(&neg_i_inv_root2, b + 1)),
            (1, 1, tau_inv.clone()),
            (2, 2, corner(&inv_root2, b)),
            (2, 5, corner(&neg_i_inv_root2, b)),
            (3, 0, corner(&neg_inv_root2, b + 1)),
            (3, 3, corner(&neg_i_inv_root2, b + 1)),
            (4, 4, tau_inv),
            (5, 2, corner(&neg_inv_root2, b)),
            (5, 5, corner(&neg_i_inv_root2, b)),
        ],
    ))
}

/// Constant-polynomial lift of a scalar matrix.
pub fn lift_poly(m: &Matrix<IQElement>) -> Matrix<MPoly<IQElement>> {
    m.map(|e| MPoly::constant(e.clone()))
}

/// Applies the reduction `sqrt(2)^2 = 2` entrywise.
pub fn reduce_root2(m: &Matrix<MPoly<IQElement>>) -> Matrix<MPoly<IQElement>> {
    let two = IQElement::from_int(2);
    m.map(|e| e.reduce_square(SQRT2_VAR, &two))
}

/// Transport check for a transition with entries in the extension by
/// `sqrt(2)`: computes `s* theta_src s`, reduces the root, and — when the
/// result is a constant matrix proportional to `theta_dst` — returns the
/// scalar.
pub fn root2_transport_check(
    s: &Matrix<MPoly<IQElement>>,
    theta_src: &Matrix<IQElement>,
    theta_dst: &Matrix<IQElement>,
) -> Option<IQElement> {
    let t = reduce_root2(&s.adjoint().mul(&lift_poly(theta_src)).mul(s));
    let mut constant = Matrix::zeros(t.nrows(), t.ncols());
    for i in 0..t.nrows() {
        for j in 0..t.ncols() {
            let e = t.get(i, j);
            if e.total_degree().unwrap_or(0) > 0 {
                return None;
            }
            constant.set(i, j, e.constant_term());
        }
    }
    let (num, den) = proportionality(&constant, theta_dst)?;
    Some(num.mul(&den.inverse().expect("denominator entry is nonzero")))
}
