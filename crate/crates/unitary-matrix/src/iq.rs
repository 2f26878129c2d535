//! Exact scalars from imaginary quadratic fields.
//!
//! [`IQElement`] is `re + im*sqrt(-d)` with exact rational coordinates and a
//! square-free positive discriminant `d`. Purely rational values normalize
//! to `d = 0`, a neutral tag that combines with every field; the scalars
//! 0, 1, -1/2 and friends can therefore sit in one matrix next to genuinely
//! imaginary entries without fixing the field up front. Mixing two elements
//! whose tags are distinct nonzero discriminants is a programming error and
//! panics, in line with the dimension asserts on matrices.

use std::fmt;

use core_arith::{Conjugate, Field, Matrix, Rational, Ring};
use serde::{Deserialize, Serialize, Serializer};

use crate::UmatError;

/// `re + im*sqrt(-d)`, an element of an imaginary quadratic field.
///
/// Invariant: `im == 0` implies `d == 0`, so equality of values is plain
/// structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct IQElement {
    d: u64,
    re: Rational,
    im: Rational,
}

fn is_square_free(d: u64) -> bool {
    let mut k = 2u64;
    while k.checked_mul(k).is_some_and(|kk| kk <= d) {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

impl IQElement {
    fn normalized(d: u64, re: Rational, im: Rational) -> Self {
        let d = if im.is_zero() { 0 } else { d };
        IQElement { d, re, im }
    }

    /// Builds `re + im*sqrt(-d)`, validating the discriminant.
    pub fn new(d: u64, re: Rational, im: Rational) -> Result<Self, UmatError> {
        if im.is_zero() {
            return Ok(IQElement { d: 0, re, im });
        }
        if d == 0 {
            return Err(UmatError::Discriminant(
                "a nonzero imaginary part needs a positive discriminant".into(),
            ));
        }
        if !is_square_free(d) {
            return Err(UmatError::Discriminant(format!("{d} is not square-free")));
        }
        Ok(IQElement { d, re, im })
    }

    /// Embeds a rational number (discriminant tag 0).
    pub fn rational(re: Rational) -> Self {
        IQElement { d: 0, re, im: Rational::zero() }
    }

    /// Embeds a small integer.
    pub fn from_int(n: i64) -> Self {
        Self::rational(Rational::from_int(n))
    }

    /// Embeds the fraction `num/den`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::ratio(num, den))
    }

    /// A Gaussian number `re + im*i`.
    pub fn gauss(re: Rational, im: Rational) -> Self {
        Self::normalized(1, re, im)
    }

    /// A Gaussian number with integer coordinates.
    pub fn gauss_int(re: i64, im: i64) -> Self {
        Self::gauss(Rational::from_int(re), Rational::from_int(im))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::gauss_int(0, 1)
    }

    /// The discriminant tag: 0 for rational values, square-free `d` otherwise.
    pub fn discriminant(&self) -> u64 {
        self.d
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    /// The rational value, when the imaginary part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    fn unified_d(&self, rhs: &Self) -> u64 {
        match (self.d, rhs.d) {
            (0, d) | (d, 0) => d,
            (a, b) => {
                assert_eq!(a, b, "mixed imaginary quadratic fields: sqrt(-{a}) vs sqrt(-{b})");
                a
            }
        }
    }

    /// The field norm `re^2 + d*im^2`, a nonnegative rational.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_int(i64::try_from(self.d).expect("discriminant fits in i64"));
        self.re.mul(&self.re).add(&d.mul(&self.im.mul(&self.im)))
    }

    /// Multiplicative inverse; `None` exactly for zero.
    pub fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n_inv = self.norm().inv().expect("norm of a nonzero element is nonzero");
        Some(Self::normalized(self.d, self.re.mul(&n_inv), self.im.neg().mul(&n_inv)))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Self {
        Self::normalized(self.d, self.re.mul(q), self.im.mul(q))
    }

    /// Whether both coordinates have nonnegative valuation at the prime
    /// `ell`, i.e. the element lies in the local ring of `ell`-integral
    /// numbers.
    pub fn is_integral_at(&self, ell: u64) -> bool {
        let ok = |q: &Rational| q.valuation(ell).map_or(true, |v| v >= 0);
        ok(&self.re) && ok(&self.im)
    }
}

impl Ring for IQElement {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    fn one() -> Self {
        Self::rational(Rational::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        let d = self.unified_d(rhs);
        Self::normalized(d, self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    fn neg(&self) -> Self {
        IQElement { d: self.d, re: self.re.neg(), im: self.im.neg() }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let d = self.unified_d(rhs);
        let dq = Rational::from_int(i64::try_from(d).expect("discriminant fits in i64"));
        // (a + b w)(c + e w) = (ac - d be) + (ae + bc) w  for  w^2 = -d.
        let re = self.re.mul(&rhs.re).sub(&dq.mul(&self.im.mul(&rhs.im)));
        let im = self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re));
        Self::normalized(d, re, im)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Field for IQElement {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl Conjugate for IQElement {
    fn conjugate(&self) -> Self {
        IQElement { d: self.d, re: self.re.clone(), im: self.im.neg() }
    }
}

impl fmt::Display for IQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let unit = if self.d == 1 { "i".to_owned() } else { format!("sqrt(-{})", self.d) };
        if self.re.is_zero() {
            write!(f, "{}*{unit}", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*{unit}", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*{unit}", self.re, self.im)
        }
    }
}

impl fmt::Debug for IQElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for IQElement {
    /// Serializes as the coordinate pair `[re, im]`; the discriminant is
    /// carried once per matrix by [`IQMatrixData`], not per entry.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.re, &self.im).serialize(serializer)
    }
}

/// Serialization form of a matrix over one imaginary quadratic field:
/// the discriminant, the dimensions, and row-major `[re, im]` pairs with
/// each coordinate in the canonical `"num/den"` string form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IQMatrixData {
    pub d: u64,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(Rational, Rational)>,
}

impl IQMatrixData {
    /// Captures a matrix. Fails if entries carry two different nonzero
    /// discriminant tags (such a matrix cannot arise from arithmetic).
    pub fn from_matrix(m: &Matrix<IQElement>) -> Result<Self, UmatError> {
        let mut d = 0u64;
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let e = m.get(i, j);
                if e.discriminant() != 0 {
                    if d != 0 && d != e.discriminant() {
                        return Err(UmatError::Discriminant(format!(
                            "matrix mixes sqrt(-{d}) and sqrt(-{})",
                            e.discriminant()
                        )));
                    }
                    d = e.discriminant();
                }
            }
        }
        let mut entries = Vec::with_capacity(m.nrows() * m.ncols());
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let e = m.get(i, j);
                entries.push((e.re().clone(), e.im().clone()));
            }
        }
        Ok(IQMatrixData { d, rows: m.nrows(), cols: m.ncols(), entries })
    }

    /// Rebuilds the matrix, validating the discriminant and the entry count.
    pub fn to_matrix(&self) -> Result<Matrix<IQElement>, UmatError> {
        if self.entries.len() != self.rows * self.cols {
            return Err(UmatError::Dimension(format!(
                "{}x{} matrix needs {} entries, got {}",
                self.rows,
                self.cols,
                self.rows * self.cols,
                self.entries.len()
            )));
        }
        let mut out = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let (re, im) = self.entries[i * self.cols + j].clone();
                out.set(i, j, IQElement::new(self.d, re, im)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn gaussian_product_matches_hand_expansion() {
        // (1 + 2i)(3 - i) = 3 - i + 6i - 2i^2 = 5 + 5i.
        let x = IQElement::gauss_int(1, 2);
        let y = IQElement::gauss_int(3, -1);
        assert_eq!(x.mul(&y), IQElement::gauss_int(5, 5));
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = IQElement::new(3, q(1, 2), q(-2, 3)).unwrap();
        let y = IQElement::new(3, q(5, 1), q(1, 7)).unwrap();
        assert_eq!(x.mul(&y).norm(), x.norm().mul(&y.norm()));
        let g = IQElement::gauss_int(3, 4);
        assert_eq!(g.norm(), q(25, 1));
    }

    #[test]
    fn conjugation_is_an_involution_that_recovers_the_norm() {
        let x = IQElement::new(7, q(2, 5), q(3, 1)).unwrap();
        assert_eq!(x.conjugate().conjugate(), x);
        let n = x.mul(&x.conjugate());
        assert_eq!(n.to_rational().unwrap(), x.norm());
    }

    #[test]
    fn inverse_round_trips_and_zero_has_none() {
        let x = IQElement::gauss(q(3, 2), q(-1, 4));
        assert_eq!(x.mul(&x.inverse().unwrap()), IQElement::one());
        assert!(IQElement::zero().inverse().is_none());
    }

    #[test]
    fn rational_values_combine_with_any_field() {
        let half = IQElement::from_ratio(1, 2);
        let x = IQElement::new(5, q(1, 1), q(1, 1)).unwrap();
        assert_eq!(half.mul(&x), IQElement::new(5, q(1, 2), q(1, 2)).unwrap());
        // An imaginary value rationalized by arithmetic drops its tag.
        let y = x.sub(&IQElement::new(5, q(0, 1), q(1, 1)).unwrap());
        assert_eq!(y.discriminant(), 0);
        assert_eq!(y, IQElement::one());
    }

    #[test]
    #[should_panic(expected = "mixed imaginary quadratic fields")]
    fn mixing_distinct_fields_panics() {
        let a = IQElement::i();
        let b = IQElement::new(3, q(0, 1), q(1, 1)).unwrap();
        let _ = a.mul(&b);
    }

    #[test]
    fn discriminants_must_be_square_free() {
        assert!(IQElement::new(12, q(0, 1), q(1, 1)).is_err());
        assert!(IQElement::new(4, q(0, 1), q(1, 1)).is_err());
        assert!(IQElement::new(0, q(0, 1), q(1, 1)).is_err());
        assert!(IQElement::new(6, q(0, 1), q(1, 1)).is_ok());
        // Rational values accept any tag and normalize it away.
        assert_eq!(IQElement::new(12, q(7, 1), q(0, 1)).unwrap().discriminant(), 0);
    }

    #[test]
    fn integrality_is_tested_coordinatewise() {
        let x = IQElement::gauss(q(3, 4), q(5, 1));
        assert!(x.is_integral_at(3));
        assert!(!x.is_integral_at(2));
        assert!(IQElement::zero().is_integral_at(2));
        let y = IQElement::gauss(q(1, 1), q(1, 5));
        assert!(!y.is_integral_at(5));
    }

    #[test]
    fn matrix_data_round_trips_through_json() {
        let m = Matrix::from_rows(vec![
            vec![IQElement::gauss_int(1, 2), IQElement::from_ratio(-1, 2)],
            vec![IQElement::zero(), IQElement::gauss(q(0, 1), q(7, 3))],
        ]);
        let data = IQMatrixData::from_matrix(&m).unwrap();
        let text = serde_json::to_string(&data).unwrap();
        let back: IQMatrixData = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
    }

    #[test]
    fn matrix_data_rejects_mixed_fields_and_bad_counts() {
        let m = Matrix::from_rows(vec![vec![
            IQElement::i(),
            IQElement::new(3, q(0, 1), q(1, 1)).unwrap(),
        ]]);
        assert!(IQMatrixData::from_matrix(&m).is_err());
        let bad = IQMatrixData {
            d: 1,
            rows: 2,
            cols: 2,
            entries: vec![(q(1, 1), q(0, 1)); 3],
        };
        assert!(bad.to_matrix().is_err());
    }
}
