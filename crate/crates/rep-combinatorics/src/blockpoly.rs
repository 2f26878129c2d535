//! Polynomials in the entries of a square matrix split into four blocks,
//! with per-monomial block degrees: determinant powers, their block-degree
//! projections, the highest-weight minor products, and exact verification
//! of the highest-weight property by unipotent substitution.

use core_arith::{Matrix, MPoly, Rational};
use serde::Serialize;

use crate::RepError;

/// Per-monomial degrees in the four blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockDegrees {
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x4: usize,
}

/// A polynomial in the entries of an `(r+s+1) x (r+s+1)` matrix with row
/// blocks `(r+1, s)` and column blocks `(s+1, r)`:
///
/// ```text
///        cols 0..s+1   cols s+1..n+1
/// rows 0..r+1   X1          X2
/// rows r+1..n+1 X3          X4
/// ```
///
/// Variable `(i, j)` is the flat index `i * (r+s+1) + j`; one extra slot
/// after all entries is reserved for the substitution parameter used in the
/// highest-weight check.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockPolynomial {
    r: usize,
    s: usize,
    poly: MPoly<Rational>,
}

impl BlockPolynomial {
    /// Wraps a raw polynomial in the block shape `(r, s)`.  The caller is
    /// responsible for the variable indexing convention.
    pub fn from_poly(r: usize, s: usize, poly: MPoly<Rational>) -> Self {
        BlockPolynomial { r, s, poly }
    }

    pub fn size(&self) -> usize {
        self.r + self.s + 1
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn poly(&self) -> &MPoly<Rational> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn var_index(&self, i: usize, j: usize) -> usize {
        i * self.size() + j
    }

    fn param_index(&self) -> usize {
        self.size() * self.size()
    }

    /// Which block the entry `(i, j)` belongs to (1..=4).
    fn block_of(&self, i: usize, j: usize) -> u8 {
        match (i <= self.r, j <= self.s) {
            (true, true) => 1,
            (true, false) => 2,
            (false, true) => 3,
            (false, false) => 4,
        }
    }

    /// Block degrees of one exponent vector.
    pub fn degrees_of(&self, exps: &[u16]) -> BlockDegrees {
        let mut d = BlockDegrees { x1: 0, x2: 0, x3: 0, x4: 0 };
        let n = self.size();
        for (flat, &e) in exps.iter().enumerate() {
            if e == 0 || flat >= n * n {
                continue;
            }
            let (i, j) = (flat / n, flat % n);
            let e = e as usize;
            match self.block_of(i, j) {
                1 => d.x1 += e,
                2 => d.x2 += e,
                3 => d.x3 += e,
                _ => d.x4 += e,
            }
        }
        d
    }

    /// The generic matrix of variables.
    fn generic_matrix(r: usize, s: usize) -> Matrix<MPoly<Rational>> {
        let n = r + s + 1;
        Matrix::from_fn(n, n, |i, j| MPoly::var(i * n + j))
    }

    /// Determinant of the generic matrix as a block polynomial.
    pub fn generic_det(r: usize, s: usize) -> BlockPolynomial {
        BlockPolynomial { r, s, poly: Self::generic_matrix(r, s).det() }
    }

    /// Keeps exactly the monomials whose block degrees satisfy the
    /// predicate.  Idempotent and linear by construction.
    pub fn proj_block_degrees(&self, pred: impl Fn(BlockDegrees) -> bool) -> BlockPolynomial {
        BlockPolynomial {
            r: self.r,
            s: self.s,
            poly: self.poly.filter_terms(|exps| pred(self.degrees_of(exps))),
        }
    }

    /// The projected determinant power: expand `det^(1+j)` and keep the
    /// monomials of degree exactly `1+j` in the first block and zero in the
    /// fourth.
    pub fn det_power_projected(r: usize, s: usize, j: u32) -> BlockPolynomial {
        let d = Self::generic_det(r, s);
        let powered = BlockPolynomial { r, s, poly: d.poly.pow(1 + j) };
        let target = (1 + j) as usize;
        powered.proj_block_degrees(|deg| deg.x1 == target && deg.x4 == 0)
    }

    /// The product of powers of upper-left minor determinants of the second
    /// and third blocks:
    ///
    /// * block 2 minor `i` (for `i = 1..=r`) carries exponent
    ///   `a[i-1] - a[i]` (with `a[r] := 0`), so `a` must be weakly
    ///   decreasing and non-negative;
    /// * block 3 minor `i` (for `i = 1..=s`) carries exponent
    ///   `b[s-i] - b[s-i-1]` (with `b[-1] := 0`), so `b` must be weakly
    ///   increasing and non-negative.
    pub fn hw_minor_poly(a: &[u32], b: &[u32], r: usize, s: usize) -> Result<BlockPolynomial, RepError> {
        if a.len() != r || b.len() != s {
            return Err(RepError::BadShape(format!(
                "need {r} row exponents and {s} column exponents, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        if a.windows(2).any(|w| w[0] < w[1]) {
            return Err(RepError::NegativeExponent(
                "first exponent list must be weakly decreasing".into(),
            ));
        }
        if b.windows(2).any(|w| w[0] > w[1]) {
            return Err(RepError::NegativeExponent(
                "second exponent list must be weakly increasing".into(),
            ));
        }
        let x = Self::generic_matrix(r, s);
        // Block 2 occupies rows 0..r+1, cols s+1..; block 3 rows r+1..,
        // cols 0..s+1.
        let x2 = x.block(0, s + 1, r + 1, r);
        let x3 = x.block(r + 1, 0, s, s + 1);
        let mut poly = MPoly::one();
        for i in 1..=r {
            let e = a[i - 1] - a.get(i).copied().unwrap_or(0);
            if e > 0 {
                poly = poly.mul(&x2.leading_minor(i).pow(e));
            }
        }
        for i in 1..=s {
            let hi = b[s - i];
            let lo = if s - i > 0 { b[s - i - 1] } else { 0 };
            let e = hi - lo;
            if e > 0 {
                poly = poly.mul(&x3.leading_minor(i).pow(e));
            }
        }
        Ok(BlockPolynomial { r, s, poly })
    }

    pub fn mul(&self, other: &BlockPolynomial) -> BlockPolynomial {
        assert_eq!((self.r, self.s), (other.r, other.s), "mismatched block shapes");
        BlockPolynomial { r: self.r, s: self.s, poly: self.poly.mul(&other.poly) }
    }

    /// Evaluates at a rational matrix (the substitution parameter slot is
    /// set to zero; it never occurs in constructed polynomials).
    pub fn eval(&self, m: &Matrix<Rational>) -> Rational {
        let n = self.size();
        assert_eq!((m.nrows(), m.ncols()), (n, n), "evaluation size mismatch");
        let mut vals = Vec::with_capacity(n * n + 1);
        for i in 0..n {
            for j in 0..n {
                vals.push(m.get(i, j).clone());
            }
        }
        vals.push(Rational::from_int(0));
        self.poly.eval(&vals)
    }

    /// Row and column weight vectors of one exponent vector.
    fn weights_of(&self, exps: &[u16]) -> (Vec<u16>, Vec<u16>) {
        let n = self.size();
        let mut rows = vec![0u16; n];
        let mut cols = vec![0u16; n];
        for (flat, &e) in exps.iter().enumerate() {
            if e == 0 || flat >= n * n {
                continue;
            }
            rows[flat / n] += e;
            cols[flat % n] += e;
        }
        (rows, cols)
    }

    /// The torus weight of the polynomial, provided every monomial agrees
    /// (otherwise `None`): the pair of row and column degree vectors.
    pub fn uniform_weight(&self) -> Option<(Vec<u16>, Vec<u16>)> {
        let mut it = self.poly.iter();
        let first = self.weights_of(it.next()?.0);
        for (exps, _) in it {
            if self.weights_of(exps) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Exact highest-weight test inside the quotient spanned by monomials
    /// with the polynomial's own first-block degree and no fourth-block
    /// variables.
    ///
    /// Checks, one elementary generator at a time with a single symbolic
    /// parameter `t`:
    /// * row operations adding an earlier row to a later row (applied from
    ///   the left), and
    /// * column operations adding an earlier column to a later column
    ///   (applied from the right),
    ///
    /// each followed by projection back to the quotient, must fix the
    /// polynomial exactly.  The polynomial must also be a torus eigenvector
    /// (uniform monomial weights) and involve no fourth-block variables.
    pub fn highest_weight_check(&self) -> bool {
        if self.poly.is_zero() || self.uniform_weight().is_none() {
            return false;
        }
        let degs: Vec<BlockDegrees> =
            self.poly.iter().map(|(e, _)| self.degrees_of(e)).collect();
        if degs.iter().any(|d| d.x4 != 0) {
            return false;
        }
        let d1 = degs[0].x1;
        if degs.iter().any(|d| d.x1 != d1) {
            return false;
        }
        let n = self.size();
        let t = self.param_index();

        // Row ops: row `to` += t * row `from`, for from < to.  In the
        // polynomial this replaces each variable (to, c) by itself plus
        // t times (from, c).
        for from in 0..n {
            for to in (from + 1)..n {
                let mut g = self.poly.clone();
                for c in 0..n {
                    let replacement = MPoly::var(self.var_index(to, c))
                        .add(&MPoly::var(t).mul(&MPoly::var(self.var_index(from, c))));
                    g = g.substitute(self.var_index(to, c), &replacement);
                }
                if !self.projected_equal(&g, d1) {
                    return false;
                }
            }
        }
        // Column ops: col `to` += t * col `from`, for from < to.
        for from in 0..n {
            for to in (from + 1)..n {
                let mut g = self.poly.clone();
                for row in 0..n {
                    let replacement = MPoly::var(self.var_index(row, to))
                        .add(&MPoly::var(t).mul(&MPoly::var(self.var_index(row, from))));
                    g = g.substitute(self.var_index(row, to), &replacement);
                }
                if !self.projected_equal(&g, d1) {
                    return false;
                }
            }
        }
        true
    }

    /// Projects `g` to first-block degree `d1` and no fourth block, then
    /// compares with `self` (the parameter variable may appear in dropped
    /// terms only).
    fn projected_equal(&self, g: &MPoly<Rational>, d1: usize) -> bool {
        let projected = g.filter_terms(|exps| {
            let d = self.degrees_of(exps);
            d.x1 == d1 && d.x4 == 0
        });
        projected == self.poly
    }
}

/// Expands the determinant of a generic block matrix with row split
/// `(p, q)` and column split `(u, v)` (so `p + q = u + v = size`), raises
/// it to `power`, and verifies that every monomial free of the
/// bottom-right block has degree at most `power` in the top-left block.
/// A counting argument shows the degree is exactly `power * (u - q)`
/// whenever any such monomial exists, so the check holds precisely for
/// shapes with `u - q <= 1` and fails honestly otherwise.  Sizes above 6
/// are refused rather than sampled.
pub fn block_degree_property_check(
    p: usize,
    q: usize,
    u: usize,
    v: usize,
    power: u32,
) -> Result<bool, RepError> {
    let size = p + q;
    if size != u + v {
        return Err(RepError::BadShape(format!("row split {p}+{q} != column split {u}+{v}")));
    }
    if size > 6 {
        return Err(RepError::SizeTooLarge { size, max: 6 });
    }
    let det = Matrix::from_fn(size, size, |i, j| MPoly::<Rational>::var(i * size + j)).det();
    let powered = det.pow(power);
    let bound = power as usize;
    for (exps, _) in powered.iter() {
        let mut x1 = 0usize;
        let mut x4 = 0usize;
        for (flat, &e) in exps.iter().enumerate() {
            let (i, j) = (flat / size, flat % size);
            if i < p && j < u {
                x1 += e as usize;
            }
            if i >= p && j >= u {
                x4 += e as usize;
            }
        }
        if x4 == 0 && x1 > bound {
            return Ok(false);
        }
    }
    Ok(true)
}
