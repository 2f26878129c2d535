//! Dense matrices over an exact ring, sized for block-structured symbolic
//! identities rather than bulk numerics.
//!
//! Determinants use cofactor expansion with zero pruning (rows are chosen to
//! maximize structural zeros), which is exact over any ring and fast on the
//! small, sparse block matrices this workspace manipulates. Inverses are
//! only available over fields; over plain rings use [`Matrix::adjugate`],
//! which satisfies `A * adj(A) = det(A) * I` without any division.

use std::fmt;

use crate::ring::{Field, Ring};

/// Entrywise conjugation (identity on real/rational scalars).
pub trait Conjugate {
    fn conjugate(&self) -> Self;
}

impl Conjugate for crate::rational::Rational {
    fn conjugate(&self) -> Self {
        self.clone()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Assembles a block matrix; every block row must have a consistent
    /// height and every block column a consistent width.
    pub fn from_blocks(blocks: &[Vec<Matrix<T>>]) -> Self {
        assert!(!blocks.is_empty());
        let ncols_blocks = blocks[0].len();
        assert!(blocks.iter().all(|row| row.len() == ncols_blocks), "ragged block grid");
        let heights: Vec<usize> = blocks.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for (bi, row) in blocks.iter().enumerate() {
            for (bj, b) in row.iter().enumerate() {
                assert_eq!(b.rows, heights[bi], "block height mismatch at ({bi},{bj})");
                assert_eq!(b.cols, widths[bj], "block width mismatch at ({bi},{bj})");
            }
        }
        let total_r: usize = heights.iter().sum();
        let total_c: usize = widths.iter().sum();
        let mut out = Matrix::zeros(total_r, total_c);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for b in row {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += b.cols;
            }
            r0 += heights[bi];
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|e| e.neg())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn scalar_mul(&self, c: &T) -> Self {
        self.map(|e| e.mul(c))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Contiguous sub-block of shape `h x w` with top-left corner `(top, left)`.
    pub fn block(&self, top: usize, left: usize, h: usize, w: usize) -> Self {
        assert!(top + h <= self.rows && left + w <= self.cols, "block out of range");
        Matrix::from_fn(h, w, |i, j| self.get(top + i, left + j).clone())
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols { self.get(i, j).clone() } else { rhs.get(i, j - self.cols).clone() }
        })
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        Matrix::from_fn(self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows { self.get(i, j).clone() } else { rhs.get(i - self.rows, j).clone() }
        })
    }

    /// Determinant by cofactor expansion, pruning zero entries and choosing
    /// the remaining row with the most zeros at every step.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.rows).collect();
        self.det_rec(&idx, &idx)
    }

    fn det_rec(&self, rows: &[usize], cols: &[usize]) -> T {
        let n = rows.len();
        if n == 0 {
            return T::one();
        }
        if n == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        // Expand along the active row with the most zero entries.
        let (ri, _) = rows
            .iter()
            .enumerate()
            .map(|(ri, &r)| {
                let zeros = cols.iter().filter(|&&c| self.get(r, c).is_zero()).count();
                (ri, zeros)
            })
            .max_by_key(|&(_, z)| z)
            .expect("n >= 1");
        let r = rows[ri];
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let mut acc = T::zero();
        for (ci, &c) in cols.iter().enumerate() {
            let a = self.get(r, c);
            if a.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_rec(&sub_rows, &sub_cols);
            let signed = if (ri + ci) % 2 == 0 { a.mul(&minor) } else { a.mul(&minor).neg() };
            acc = acc.add(&signed);
        }
        acc
    }

    /// Determinant of the leading principal `k x k` minor.
    pub fn leading_minor(&self, k: usize) -> T {
        self.block(0, 0, k, k).det()
    }

    /// Classical adjugate: `self * adj = det * I` over any commutative ring.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        Matrix::from_fn(n, n, |i, j| {
            // adj[i][j] = (-1)^{i+j} * minor with row j and column i removed.
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let m = self.det_rec(&rows, &cols);
            if (i + j) % 2 == 0 { m } else { m.neg() }
        })
    }
}

impl<T: Ring + Conjugate> Matrix<T> {
    pub fn conj_entrywise(&self) -> Self {
        self.map(|e| e.conjugate())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.conj_entrywise().transpose()
    }
}

impl<T: Field> Matrix<T> {
    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<T> = Matrix::identity(n);
        for col in 0..n {
            // Any nonzero pivot works in an exact field.
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.get(col, j).clone();
                    a.set(col, j, a.get(pivot, j).clone());
                    a.set(pivot, j, tmp);
                    let tmp = inv.get(col, j).clone();
                    inv.set(col, j, inv.get(pivot, j).clone());
                    inv.set(pivot, j, tmp);
                }
            }
            let scale = a.get(col, col).inv().expect("pivot nonzero");
            for j in 0..n {
                a.set(col, j, a.get(col, j).mul(&scale));
                inv.set(col, j, inv.get(col, j).mul(&scale));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let na = a.get(r, j).sub(&factor.mul(a.get(col, j)));
                    a.set(r, j, na);
                    let ni = inv.get(r, j).sub(&factor.mul(inv.get(col, j)));
                    inv.set(r, j, ni);
                }
            }
        }
        Some(inv)
    }
}

impl<T: Ring + fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect(),
        )
    }

    #[test]
    fn det_of_known_matrices() {
        assert_eq!(m(&[&[2]]).det(), Rational::from_int(2));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).det(), Rational::from_int(-2));
        // Vandermonde on 1, 2, 3: det = (2-1)(3-1)(3-2) = 2.
        let v = m(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(v.det(), Rational::from_int(2));
    }

    #[test]
    fn det_is_multiplicative() {
        let a = m(&[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let b = m(&[&[2, 0, 1], &[1, 1, 0], &[0, 5, 1]]);
        assert_eq!(a.mul(&b).det(), a.det() * b.det());
    }

    #[test]
    fn adjugate_identity_over_the_integers_inside_q() {
        let a = m(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        let prod = a.mul(&a.adjugate());
        let expect = Matrix::<Rational>::identity(3).scalar_mul(&a.det());
        assert_eq!(prod, expect);
    }

    #[test]
    fn inverse_round_trips() {
        let a = m(&[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn blocks_assemble_and_extract() {
        let a = Matrix::<Rational>::identity(2);
        let z = Matrix::<Rational>::zeros(2, 1);
        let b = m(&[&[7], &[8]]);
        let assembled = Matrix::from_blocks(&[vec![a.clone(), b.clone()], vec![z.transpose(), m(&[&[9]])]]);
        assert_eq!(assembled.nrows(), 3);
        assert_eq!(assembled.ncols(), 3);
        assert_eq!(assembled.block(0, 2, 2, 1), b);
        assert_eq!(assembled.get(2, 2), &Rational::from_int(9));
        assert_eq!(assembled.block(0, 0, 2, 2), a);
    }

    #[test]
    fn leading_minors_of_a_positive_definite_shape() {
        let a = m(&[&[2, 1], &[1, 2]]);
        assert_eq!(a.leading_minor(1), Rational::from_int(2));
        assert_eq!(a.leading_minor(2), Rational::from_int(3));
    }
}
