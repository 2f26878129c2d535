//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored lowest degree first with a trimmed invariant:
//! the last stored coefficient is nonzero, and the zero polynomial is the
//! empty vector. Because the zero polynomial carries no coefficient, the
//! type works uniformly for coefficient rings whose elements carry context
//! (a prime and precision, a cyclotomic level) and cannot produce a zero
//! out of thin air — see [`ContextRing`].

use std::fmt;

use crate::ring::{ContextRing, Field};

/// Polynomial in one variable, dense, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: ContextRing> UniPoly<C> {
    /// Builds from raw coefficients `c0 + c1 x + ...`, trimming high zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.ctx_is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c · x^deg`.
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.ctx_is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            coeffs.push(c.zero_like());
        }
        coeffs.push(c);
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, padding with zeros manufactured from `like`.
    pub fn coeff(&self, i: usize, like: &C) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero_like())
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (i, c) in short.iter().enumerate() {
            out[i] = out[i].ctx_add(c);
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.ctx_neg()).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.ctx_is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].ctx_add(&a.ctx_mul(b));
            }
        }
        UniPoly::new(out)
    }

    /// Product with all terms of degree `>= n` discarded.
    pub fn mul_truncated(&self, rhs: &Self, n: usize) -> Self {
        if self.is_zero() || rhs.is_zero() || n == 0 {
            return UniPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; n.min(self.coeffs.len() + rhs.coeffs.len() - 1)];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.ctx_is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].ctx_add(&a.ctx_mul(b));
            }
        }
        UniPoly::new(out)
    }

    pub fn truncate(&self, n: usize) -> Self {
        UniPoly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.ctx_mul(c)).collect())
    }

    /// Horner evaluation; the context for an empty polynomial comes from `x`.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.ctx_mul(x).ctx_add(c);
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self
    where
        C: ContextRing,
    {
        if e == 0 {
            let one = self
                .coeffs
                .first()
                .map(|c| c.one_like())
                .expect("cannot raise the zero polynomial to the power 0 without context");
            return UniPoly::constant(one);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Quotient and remainder by a *monic* divisor (needs no inverses).
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        assert!(
            divisor.leading().is_some_and(|c| c.ctx_sub(&c.one_like()).ctx_is_zero()),
            "divisor must be monic"
        );
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (UniPoly::zero(), self.clone());
        }
        let zero = divisor.coeffs[0].zero_like();
        let mut quot = vec![zero; rem.len() - d];
        for top in (d..rem.len()).rev() {
            let c = rem[top].clone();
            if c.ctx_is_zero() {
                continue;
            }
            quot[top - d] = c.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[top - d + i] = rem[top - d + i].ctx_sub(&c.ctx_mul(b));
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Remainder by a monic divisor.
    pub fn rem_monic(&self, divisor: &Self) -> Self {
        self.div_rem_monic(divisor).1
    }

    /// Multiplicative inverse as a power series mod `x^n`, given the inverse
    /// of the constant term (so the coefficient ring need not be a field).
    pub fn inv_series(&self, n: usize, c0_inv: &C) -> Self {
        assert!(!self.is_zero(), "series inverse of zero");
        let a0 = &self.coeffs[0];
        debug_assert!(
            a0.ctx_mul(c0_inv).ctx_sub(&a0.one_like()).ctx_is_zero(),
            "c0_inv must invert the constant term"
        );
        let mut out: Vec<C> = Vec::with_capacity(n);
        for k in 0..n {
            if k == 0 {
                out.push(c0_inv.clone());
                continue;
            }
            // b_k = -a_0^{-1} * sum_{i=1..=k} a_i b_{k-i}
            let mut s = a0.zero_like();
            for i in 1..=k.min(self.coeffs.len() - 1) {
                s = s.ctx_add(&self.coeffs[i].ctx_mul(&out[k - i]));
            }
            out.push(s.ctx_neg().ctx_mul(c0_inv));
        }
        UniPoly::new(out)
    }

    /// Applies `f` to every coefficient (zeros may appear and are trimmed).
    pub fn map<D: ContextRing>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> UniPoly<F> {
    /// Quotient and remainder over a field.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by the zero polynomial");
        let lead_inv = lead.inv().expect("field leading coefficient is invertible");
        let monic = divisor.scale(&lead_inv);
        let (q, r) = self.div_rem_monic(&monic);
        (q.scale(&lead_inv), r)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "polynomial division was not exact");
        q
    }

    /// Resultant of `self` and `other` via the Euclidean recursion
    /// `Res(f, g) = lc(g)^{deg f - deg r} (-1)^{deg f deg g} Res(g, r)`
    /// with `r = f mod g`.
    pub fn resultant(&self, other: &Self) -> F {
        fn go<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> F {
            let m = match f.degree() {
                None => return F::zero(),
                Some(m) => m,
            };
            let n = match g.degree() {
                None => return F::zero(),
                Some(n) => n,
            };
            if n == 0 {
                // Res(f, c) = c^m
                return g.coeffs[0].pow_u(m as u64);
            }
            if m < n {
                let sign = if (m * n) % 2 == 1 { F::one().neg() } else { F::one() };
                return sign.mul(&go(g, f));
            }
            let (_, r) = f.div_rem(g);
            let lc = g.leading().expect("n >= 1").clone();
            let dr = r.degree().map_or(0, |d| d);
            if r.is_zero() {
                return F::zero();
            }
            let sign = if (m * n) % 2 == 1 { F::one().neg() } else { F::one() };
            sign.mul(&lc.pow_u((m - dr) as u64)).mul(&go(g, &r))
        }
        go(self, other)
    }
}

impl<C: ContextRing + fmt::Debug> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.ctx_is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c:?}")?,
                1 => write!(f, "({c:?})*x")?,
                _ => write!(f, "({c:?})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn poly(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::new(cs.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn trimming_keeps_equality_honest() {
        let a = UniPoly::new(vec![q(1, 1), q(2, 1), q(0, 1)]);
        let b = poly(&[1, 2]);
        assert_eq!(a, b);
        assert_eq!(a.degree(), Some(1));
    }

    #[test]
    fn product_of_binomials() {
        // (x - 1)(x + 1) = x^2 - 1
        let f = poly(&[-1, 1]);
        let g = poly(&[1, 1]);
        assert_eq!(f.mul(&g), poly(&[-1, 0, 1]));
    }

    #[test]
    fn division_recovers_factors() {
        let f = poly(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let d = poly(&[-2, 1]);
        let (quot, rem) = f.div_rem(&d);
        assert!(rem.is_zero());
        assert_eq!(quot, poly(&[3, -4, 1]));
    }

    #[test]
    fn series_inverse_of_one_minus_x() {
        // 1/(1-x) = 1 + x + x^2 + ... mod x^5
        let f = poly(&[1, -1]);
        let inv = f.inv_series(5, &q(1, 1));
        assert_eq!(inv, poly(&[1, 1, 1, 1, 1]));
        assert_eq!(f.mul_truncated(&inv, 5), poly(&[1]));
    }

    #[test]
    fn resultant_detects_shared_roots() {
        let f = poly(&[-1, 0, 1]); // (x-1)(x+1)
        let g = poly(&[-2, 1]); // x - 2
        // Res(f, g) = f evaluated at the root of g, times lc(g)^deg f = 3.
        assert_eq!(f.resultant(&g), q(3, 1));
        let shares = poly(&[-1, 1]); // x - 1
        assert_eq!(f.resultant(&shares), q(0, 1));
    }

    #[test]
    fn resultant_as_product_over_roots() {
        // f = (x-1)(x-2), g = (x-4)(x-5); Res(f,g) = prod (r_i - s_j) sign
        // convention: Res(f,g) = lc(f)^deg g * prod g(r_i) = g(1)*g(2) = 12*6.
        let f = poly(&[2, -3, 1]);
        let g = poly(&[20, -9, 1]);
        assert_eq!(f.resultant(&g), q(72, 1));
    }

    #[test]
    fn eval_agrees_with_expansion() {
        let f = poly(&[1, 2, 3]); // 1 + 2x + 3x^2
        assert_eq!(f.eval(&q(2, 1)), q(17, 1));
        assert_eq!(UniPoly::<Rational>::zero().eval(&q(5, 1)), q(0, 1));
    }
}
