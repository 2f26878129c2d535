//! Truncated formal q-expansions and the coefficient-level operators.

use core_arith::ContextRing;
use serde::ser::SerializeMap;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QExpError {
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("weights {0} and {1} are not congruent mod {2}")]
    CongruenceViolation(i64, i64, u64),
    #[error("prime {0} does not divide the level {1}")]
    PrimeNotInLevel(u64, u64),
    #[error("p-adic precision problem: {0}")]
    Precision(#[from] core_arith::PadicError),
}

/// A formal q-expansion known exactly through `q^N`.
///
/// Coefficients `a_1 .. a_N` are stored densely; the constant term is
/// optional and absent by default (the series families verified here start
/// at `n = 1`). Operations never pad with unverified zeros: anything that
/// shrinks the known range (like [`u_p`]) returns the smaller truncation.
#[derive(Clone, PartialEq, Debug)]
pub struct QExpansion<C: ContextRing> {
    trunc: usize,
    a0: Option<C>,
    /// `coeffs[i]` is the coefficient of `q^{i+1}`.
    coeffs: Vec<C>,
    /// Optional display tags carried through operations ("weight 3",
    /// "level 5"); no semantics attached.
    pub weight_label: Option<String>,
    pub level_label: Option<String>,
}

impl<C: ContextRing> QExpansion<C> {
    /// Builds from the coefficients of `q^1 .. q^N`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        QExpansion {
            trunc: coeffs.len(),
            a0: None,
            coeffs,
            weight_label: None,
            level_label: None,
        }
    }

    pub fn with_constant_term(mut self, a0: C) -> Self {
        self.a0 = Some(a0);
        self
    }

    pub fn with_labels(mut self, weight: impl Into<String>, level: impl Into<String>) -> Self {
        self.weight_label = Some(weight.into());
        self.level_label = Some(level.into());
        self
    }

    /// The truncation `N`: coefficients are exact for `1 <= n <= N`.
    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn constant_term(&self) -> Option<&C> {
        self.a0.as_ref()
    }

    /// Coefficient of `q^n` for `1 <= n <= N`.
    pub fn coeff(&self, n: usize) -> &C {
        assert!((1..=self.trunc).contains(&n), "coefficient index outside truncation");
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.a0.iter().all(|c| c.ctx_is_zero()) && self.coeffs.iter().all(|c| c.ctx_is_zero())
    }

    /// Forgets coefficients beyond `n`.
    pub fn truncate(&self, n: usize) -> Self {
        assert!(n <= self.trunc, "cannot extend a truncation");
        let mut out = self.clone();
        out.coeffs.truncate(n);
        out.trunc = n;
        out
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, QExpError> {
        if self.trunc != rhs.trunc {
            return Err(QExpError::TruncationMismatch(self.trunc, rhs.trunc));
        }
        let a0 = match (&self.a0, &rhs.a0) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => Some(a.ctx_add(b)),
        };
        Ok(QExpansion {
            trunc: self.trunc,
            a0,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.ctx_add(b))
                .collect(),
            weight_label: None,
            level_label: None,
        })
    }

    /// Applies `f` to every stored coefficient.
    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        QExpansion {
            trunc: self.trunc,
            a0: self.a0.as_ref().map(&f),
            coeffs: self.coeffs.iter().map(&f).collect(),
            weight_label: self.weight_label.clone(),
            level_label: self.level_label.clone(),
        }
    }
}

/// Cauchy product, exact through the common truncation. Absent constant
/// terms are treated as zero, which keeps every coefficient of the product
/// fully determined by the stored ranges.
pub fn series_mul<C: ContextRing>(
    f: &QExpansion<C>,
    g: &QExpansion<C>,
) -> Result<QExpansion<C>, QExpError> {
    if f.trunc != g.trunc {
        return Err(QExpError::TruncationMismatch(f.trunc, g.trunc));
    }
    let n = f.trunc;
    let term = |fa: Option<&C>, gb: Option<&C>| -> Option<C> {
        match (fa, gb) {
            (Some(a), Some(b)) => Some(a.ctx_mul(b)),
            _ => None,
        }
    };
    fn at<C: ContextRing>(h: &QExpansion<C>, i: usize) -> Option<&C> {
        if i == 0 {
            h.a0.as_ref()
        } else {
            Some(h.coeff(i))
        }
    }
    let a0 = term(f.a0.as_ref(), g.a0.as_ref());
    let mut coeffs = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc: Option<C> = None;
        for i in 0..=m {
            if let Some(t) = term(at(f, i), at(g, m - i)) {
                acc = Some(match acc {
                    Some(s) => s.ctx_add(&t),
                    None => t,
                });
            }
        }
        coeffs.push(acc.unwrap_or_else(|| f.coeffs[0].zero_like()));
    }
    Ok(QExpansion { trunc: n, a0, coeffs, weight_label: None, level_label: None })
}

/// The weight-raising differential operator iterated `j` times:
/// coefficientwise `a_n -> n^j a_n` (the constant term is annihilated for
/// `j >= 1`, fixed for `j = 0`).
pub fn delta<C: ContextRing>(f: &QExpansion<C>, j: u32) -> QExpansion<C> {
    if j == 0 {
        return f.clone();
    }
    let mut out = f.clone();
    out.a0 = out.a0.map(|c| c.zero_like());
    for (i, c) in out.coeffs.iter_mut().enumerate() {
        let n = (i + 1) as i64;
        let mut scale = c.one_like();
        for _ in 0..j {
            scale = scale.ctx_mul(&c.ctx_from_i64(n));
        }
        *c = c.ctx_mul(&scale);
    }
    out.weight_label = None;
    out
}

/// `U_p`: picks out `a_{np}`. The result is exact only through `floor(N/p)`,
/// and that is the truncation it reports. A present constant term is fixed.
pub fn u_p<C: ContextRing>(f: &QExpansion<C>, p: u64) -> QExpansion<C> {
    assert!(p >= 1);
    let new_n = f.trunc / p as usize;
    QExpansion {
        trunc: new_n,
        a0: f.a0.clone(),
        coeffs: (1..=new_n).map(|n| f.coeff(n * p as usize).clone()).collect(),
        weight_label: None,
        level_label: None,
    }
}

/// `V_p`: sends `q -> q^p`, so `a_n` moves to `a_{np}`. Every coefficient of
/// the image through `N*p` is determined, and the result says so.
pub fn v_p<C: ContextRing>(f: &QExpansion<C>, p: u64) -> QExpansion<C> {
    assert!(p >= 1);
    let p = p as usize;
    let new_n = f.trunc * p;
    let mut coeffs = Vec::with_capacity(new_n);
    if let Some(like) = f.coeffs.first().or(f.a0.as_ref()) {
        for n in 1..=new_n {
            if n % p == 0 {
                coeffs.push(f.coeff(n / p).clone());
            } else {
                coeffs.push(like.zero_like());
            }
        }
    }
    QExpansion {
        trunc: new_n,
        a0: f.a0.clone(),
        coeffs,
        weight_label: None,
        level_label: None,
    }
}

/// Tags a coefficient ring with the name used in the JSON export format.
pub trait RingTag {
    const RING_NAME: &'static str;
}

impl RingTag for core_arith::Rational {
    const RING_NAME: &'static str = "rational";
}

impl RingTag for core_arith::PadicInt {
    const RING_NAME: &'static str = "padic";
}

/// Export form: `{"ring": .., "N": .., "coeffs": {"n": value, ..}}` with
/// zero coefficients omitted and keys in increasing numeric order.
impl<C: ContextRing + RingTag + Serialize> Serialize for QExpansion<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a, C: ContextRing> {
            ring: &'static str,
            #[serde(rename = "N")]
            n: usize,
            coeffs: CoeffMap<'a, C>,
        }
        struct CoeffMap<'a, C: ContextRing>(&'a QExpansion<C>);
        impl<C: ContextRing + Serialize> Serialize for CoeffMap<'_, C> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let f = self.0;
                let mut m = s.serialize_map(None)?;
                if let Some(a0) = &f.a0 {
                    if !a0.ctx_is_zero() {
                        m.serialize_entry("0", a0)?;
                    }
                }
                for n in 1..=f.trunc {
                    let c = f.coeff(n);
                    if !c.ctx_is_zero() {
                        m.serialize_entry(&n.to_string(), c)?;
                    }
                }
                m.end()
            }
        }
        Repr { ring: C::RING_NAME, n: self.trunc, coeffs: CoeffMap(self) }.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core_arith::Rational;

    fn geom(n: usize) -> QExpansion<Rational> {
        // q + q^2 + ... + q^n
        QExpansion::from_coeffs(vec![Rational::from_int(1); n])
    }

    fn ints(v: &[i64]) -> QExpansion<Rational> {
        QExpansion::from_coeffs(v.iter().map(|&x| Rational::from_int(x)).collect())
    }

    #[test]
    fn product_with_one_is_identity() {
        let f = ints(&[3, 1, 4, 1, 5]);
        let one = QExpansion::from_coeffs(vec![Rational::from_int(0); 5])
            .with_constant_term(Rational::from_int(1));
        assert_eq!(series_mul(&f, &one).unwrap().coeffs(), f.coeffs());
    }

    #[test]
    fn q_times_q_is_q_squared() {
        let q = ints(&[1, 0, 0]);
        let sq = series_mul(&q, &q).unwrap();
        assert_eq!(sq.coeffs(), ints(&[0, 1, 0]).coeffs());
    }

    #[test]
    fn square_of_geometric_series_counts_pairs() {
        // Coefficient of q^5 in (q + q^2 + ...)^2 = number of ordered pairs
        // (i, j) with i + j = 5, i, j >= 1.
        let sq = series_mul(&geom(6), &geom(6)).unwrap();
        assert_eq!(sq.coeff(5), &Rational::from_int(4));
    }

    #[test]
    fn truncation_mismatch_is_an_error() {
        assert!(matches!(
            series_mul(&geom(5), &geom(6)),
            Err(QExpError::TruncationMismatch(5, 6))
        ));
    }

    #[test]
    fn delta_zero_is_identity_and_one_scales_linearly() {
        let f = ints(&[7, -2, 9]);
        assert_eq!(delta(&f, 0), f);
        let d = delta(&f, 1);
        assert_eq!(d.coeffs(), ints(&[7, -4, 27]).coeffs());
        // j = 1 on the bare q leaves it fixed.
        let q = ints(&[1]);
        assert_eq!(delta(&q, 1).coeffs(), q.coeffs());
    }

    #[test]
    fn delta_powers_compose() {
        let f = ints(&[2, 3, 5, 7]);
        assert_eq!(delta(&delta(&f, 2), 3), delta(&f, 5));
    }

    #[test]
    fn up_after_vp_is_the_identity() {
        let f = ints(&[1, 2, 3, 4, 5]);
        let back = u_p(&v_p(&f, 3), 3);
        assert_eq!(back.coeffs(), f.coeffs());
        assert_eq!(back.truncation(), 5);
    }

    #[test]
    fn up_reads_off_multiples() {
        // u_2 of sum n q^n has coefficient 6 at n = 3.
        let f = ints(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let g = u_p(&f, 2);
        assert_eq!(g.truncation(), 4);
        assert_eq!(g.coeff(3), &Rational::from_int(6));
    }

    #[test]
    fn json_export_is_sparse_and_ordered() {
        let f = ints(&[1, 0, 3]);
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"ring":"rational","N":3,"coeffs":{"1":"1","3":"3"}}"#);
    }
}
