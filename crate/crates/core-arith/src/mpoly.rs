//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Terms are keyed by exponent vectors with trailing zeros trimmed, so a
//! polynomial never needs to know "how many variables exist" — `x0` built
//! with two variables in mind and `x0` built with ten are the same value.
//! Coefficient zero is never stored; the zero polynomial is the empty map.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::Ring;

/// Multivariate polynomial; `terms[exps]` is the coefficient of
/// `prod_i x_i^{exps[i]}`.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<C: Ring> {
    terms: BTreeMap<Vec<u16>, C>,
}

fn trim(mut v: Vec<u16>) -> Vec<u16> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn exp_add(a: &[u16], b: &[u16]) -> Vec<u16> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out.push(x.checked_add(y).expect("exponent overflow"));
    }
    out
}

impl<C: Ring> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0u16; i + 1];
        exps[i] = 1;
        MPoly::term(C::one(), exps)
    }

    /// A single term `c * prod x_i^{exps[i]}`.
    pub fn term(c: C, exps: Vec<u16>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.is_empty())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u16>, &C)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&[])
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u16>, C>, exps: Vec<u16>, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            Self::insert_add(&mut terms, e.clone(), c.clone());
        }
        MPoly { terms }
    }

    pub fn neg(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                Self::insert_add(&mut terms, exp_add(ea, eb), ca.mul(cb));
            }
        }
        MPoly { terms }
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            Self::insert_add(&mut terms, e.clone(), a.mul(c));
        }
        MPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms
            .keys()
            .map(|e| e.get(var).copied().unwrap_or(0) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Evaluates with `vals[i]` substituted for `x_i`; every variable that
    /// occurs must be covered.
    pub fn eval(&self, vals: &[C]) -> C {
        let mut acc = C::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&vals[i].pow_u(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replaces `x_var` by an arbitrary polynomial.
    pub fn substitute(&self, var: usize, replacement: &Self) -> Self {
        let mut acc = MPoly::zero();
        for (exps, c) in &self.terms {
            let e = exps.get(var).copied().unwrap_or(0);
            let mut rest = exps.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            let base = MPoly::term(c.clone(), rest);
            acc = acc.add(&base.mul(&replacement.pow(e as u32)));
        }
        acc
    }

    /// Rewrites `x_var^2 -> val` until the exponent of `x_var` is 0 or 1.
    /// Sound when the quotient by `x_var^2 - val` is intended (e.g. a square
    /// root adjoined to the coefficient ring).
    pub fn reduce_square(&self, var: usize, val: &C) -> Self {
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let e = exps.get(var).copied().unwrap_or(0);
            let mut rest = exps.clone();
            if var < rest.len() {
                rest[var] = e % 2;
            }
            let scaled = c.mul(&val.pow_u((e / 2) as u64));
            Self::insert_add(&mut terms, trim(rest), scaled);
        }
        MPoly { terms }
    }

    /// Keeps only the terms whose (untrimmed-padded) exponent vector passes
    /// the predicate.
    pub fn filter_terms(&self, pred: impl Fn(&[u16]) -> bool) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| pred(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Renames variables by `map` (must be injective on the variables that
    /// actually occur; images may collide with nothing).
    pub fn rename_vars(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut terms = BTreeMap::new();
        for (exps, c) in &self.terms {
            let mut out: Vec<u16> = Vec::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map(i);
                if out.len() <= j {
                    out.resize(j + 1, 0);
                }
                assert_eq!(out[j], 0, "variable renaming must be injective");
                out[j] = e;
            }
            Self::insert_add(&mut terms, trim(out), c.clone());
        }
        MPoly { terms }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            MPoly::<D>::insert_add(&mut terms, e.clone(), f(c));
        }
        MPoly { terms }
    }

    /// The sum of exponents of the listed variables in a single exponent key.
    pub fn block_degree(exps: &[u16], vars: &[usize]) -> usize {
        vars.iter()
            .map(|&v| exps.get(v).copied().unwrap_or(0) as usize)
            .sum()
    }
}

impl<C: Ring> Ring for MPoly<C> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        MPoly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        MPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MPoly::mul(self, rhs)
    }
    fn is_zero(&self) -> bool {
        MPoly::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        MPoly::constant(C::from_i64(n))
    }
}

impl<C: Ring + crate::matrix::Conjugate> crate::matrix::Conjugate for MPoly<C> {
    /// Coefficient-wise conjugation. The indeterminates are treated as fixed
    /// real quantities; callers whose variables stand for non-real values
    /// must handle those by an explicit variable renaming instead.
    fn conjugate(&self) -> Self {
        self.map_coeffs(|c| c.conjugate())
    }
}

impl<C: Ring + fmt::Debug> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}
