//! Generalized Bernoulli numbers and Dirichlet L-values at non-positive
//! integers, by exact power-series division.

use core_arith::{CyclotomicElement, Rational, UniPoly};

use crate::character::DirichletCharacter;

/// `B_{n,chi}` from the exponential generating function
/// `sum_a chi(a) t e^{at} / (e^{Nt} - 1) = sum_n B_{n,chi} t^n / n!`,
/// where `N` is the modulus of the character. The value is a cyclotomic
/// element of level `ord(chi)` (a plain rational for quadratic or principal
/// characters).
///
/// The denominator is handled as `(e^{Nt} - 1)/t`, whose constant term is
/// the integer `N`; its inversion therefore needs only a rational inverse,
/// even when the numerator has irrational cyclotomic coefficients.
pub fn generalized_bernoulli(chi: &DirichletCharacter, n: u32) -> CyclotomicElement {
    let modulus = chi.modulus();
    let level = chi.order();
    let terms = n as usize + 1;

    // Numerator sum_a chi(a) e^{at}, truncated: coefficient of t^k is
    // sum_a chi(a) a^k / k!.
    let mut factorial = Rational::from_int(1);
    let mut numerator_coeffs = Vec::with_capacity(terms);
    for k in 0..terms as i64 {
        if k > 0 {
            factorial = &factorial * &Rational::from_int(k);
        }
        let mut coeff = CyclotomicElement::zero(level);
        for a in 1..=u64::from(modulus) {
            let apow = Rational::from_int(a as i64).pow(k).expect("a > 0");
            coeff = coeff.add(&chi.value(a).scalar_mul(&apow));
        }
        coeff = coeff.scalar_mul(&factorial.inv().expect("factorial nonzero"));
        numerator_coeffs.push(coeff);
    }
    let numerator = UniPoly::new(numerator_coeffs);

    // Denominator (e^{Nt} - 1)/t: coefficient of t^k is N^{k+1}/(k+1)!.
    let mut factorial = Rational::from_int(1);
    let mut denominator_coeffs = Vec::with_capacity(terms);
    for k in 0..terms as i64 {
        factorial = &factorial * &Rational::from_int(k + 1);
        let npow = Rational::from_int(i64::from(modulus)).pow(k + 1).expect("N >= 1");
        let c = &npow * &factorial.inv().expect("factorial nonzero");
        denominator_coeffs.push(CyclotomicElement::from_rational(level, c));
    }
    let denominator = UniPoly::new(denominator_coeffs);

    let inv_n = CyclotomicElement::from_rational(
        level,
        Rational::from_int(i64::from(modulus)).inv().expect("N >= 1"),
    );
    let quotient = numerator.mul_truncated(&denominator.inv_series(terms, &inv_n), terms);

    // B_n = n! * [t^n] quotient.
    let mut n_factorial = Rational::from_int(1);
    for k in 2..=i64::from(n) {
        n_factorial = &n_factorial * &Rational::from_int(k);
    }
    quotient.coeff(n as usize, &CyclotomicElement::zero(level)).scalar_mul(&n_factorial)
}

/// The L-value `L(1-n, chi) = -B_{n,chi}/n` for `n >= 1`, exact in the
/// cyclotomic field of level `ord(chi)`.
pub fn l_value_nonpositive(chi: &DirichletCharacter, n: u32) -> CyclotomicElement {
    assert!(n >= 1, "defined for n >= 1");
    generalized_bernoulli(chi, n)
        .scalar_mul(&Rational::ratio(-1, i64::from(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::make_character;

    fn rational_bernoulli(chi: &DirichletCharacter, n: u32) -> Rational {
        generalized_bernoulli(chi, n).to_rational().expect("rational-valued character")
    }

    #[test]
    fn odd_character_mod_four() {
        let chi = make_character(4, 2, &[1]).unwrap();
        assert_eq!(rational_bernoulli(&chi, 1), Rational::ratio(-1, 2));
    }

    #[test]
    fn classical_value_at_two() {
        let trivial = make_character(1, 1, &[]).unwrap();
        assert_eq!(rational_bernoulli(&trivial, 2), Rational::ratio(1, 6));
    }

    #[test]
    fn odd_character_mod_three() {
        let chi = make_character(3, 2, &[1]).unwrap();
        assert_eq!(rational_bernoulli(&chi, 1), Rational::ratio(-1, 3));
    }

    #[test]
    fn classical_sequence_through_the_trivial_character() {
        let trivial = make_character(1, 1, &[]).unwrap();
        let expect = [
            Rational::from_int(1),
            Rational::ratio(1, 2),
            Rational::ratio(1, 6),
            Rational::from_int(0),
            Rational::ratio(-1, 30),
            Rational::from_int(0),
            Rational::ratio(1, 42),
        ];
        for (n, want) in expect.iter().enumerate() {
            assert_eq!(&rational_bernoulli(&trivial, n as u32), want, "n = {n}");
        }
    }

    #[test]
    fn l_values_of_the_quadratic_character_mod_four() {
        // For the odd character mod 4 these are half the Euler numbers:
        // L(0) = 1/2, L(-2) = -1/2, L(-4) = 5/2.
        let chi = make_character(4, 2, &[1]).unwrap();
        assert_eq!(l_value_nonpositive(&chi, 1).to_rational(), Some(Rational::ratio(1, 2)));
        assert_eq!(l_value_nonpositive(&chi, 3).to_rational(), Some(Rational::ratio(-1, 2)));
        assert_eq!(l_value_nonpositive(&chi, 5).to_rational(), Some(Rational::ratio(5, 2)));
    }

    #[test]
    fn euler_factor_relation_for_induced_characters() {
        // Inducing the quadratic character mod 3 to modulus 12 multiplies
        // B_{n,chi} by (1 - chi(2) 2^{n-1}) for the new prime 2.
        let chi3 = make_character(3, 2, &[1]).unwrap();
        let chi12 = chi3.induce(12);
        for n in 1..=5u32 {
            let base = rational_bernoulli(&chi3, n);
            let induced = rational_bernoulli(&chi12, n);
            let chi_at_2 = chi3.value(2).to_rational().unwrap();
            let factor = &Rational::from_int(1)
                - &(&chi_at_2 * &Rational::from_int(2).pow(i64::from(n) - 1).unwrap());
            assert_eq!(induced, &base * &factor, "n = {n}");
        }
    }
}
