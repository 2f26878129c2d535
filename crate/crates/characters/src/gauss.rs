//! Gauss sums of primitive Dirichlet characters, exactly.

use core_arith::CyclotomicElement;
use num_integer::Integer;

use crate::character::{CharError, DirichletCharacter};

/// A primitive character together with its Gauss sum, which lives in the
/// cyclotomic field of level `lcm(ord, cond)`.
#[derive(Clone, PartialEq, Debug)]
pub struct GaussSum {
    pub character: DirichletCharacter,
    pub value: CyclotomicElement,
}

impl GaussSum {
    pub fn new(chi: &DirichletCharacter) -> Result<Self, CharError> {
        Ok(GaussSum { character: chi.clone(), value: gauss_sum(chi)? })
    }

    /// The level the value is expressed in.
    pub fn level(&self) -> u32 {
        self.character.order().lcm(&self.character.conductor())
    }
}

/// `sum_{a mod c} chi(a) zeta_c^a` for a primitive character of conductor
/// `c`. The sum over the empty modulus (the principal character mod 1) is
/// pinned to 1.
pub fn gauss_sum(chi: &DirichletCharacter) -> Result<CyclotomicElement, CharError> {
    if !chi.is_primitive() {
        return Err(CharError::NotPrimitive(chi.modulus(), chi.conductor()));
    }
    let c = chi.conductor();
    let level = chi.order().lcm(&c);
    if c == 1 {
        return Ok(CyclotomicElement::one(level));
    }
    let mut acc = CyclotomicElement::zero(level);
    for a in 1..u64::from(c) {
        let Some(e) = chi.exponent_at(a) else { continue };
        // chi(a) = zeta_ord^e = zeta_level^{e * level/ord};
        // zeta_c^a = zeta_level^{a * level/c}.
        let chi_part = i64::from(e) * i64::from(level / chi.order());
        let additive_part = a as i64 * i64::from(level / c);
        acc = acc.add(&CyclotomicElement::zeta_pow(level, chi_part + additive_part));
    }
    Ok(acc)
}

/// Exact check of `g(chi) * g(conj chi) = chi(-1) * cond(chi)` for a
/// primitive character. This is the normalization-independent identity
/// underlying the epsilon-factor pairing; it holds in the cyclotomic field
/// with no embedding chosen.
pub fn epsilon_pair_check(chi: &DirichletCharacter) -> Result<bool, CharError> {
    let g = gauss_sum(chi)?;
    let g_bar = gauss_sum(&chi.conjugate())?;
    let lhs = g.mul(&g_bar);
    let sign = i64::from(chi.parity());
    let rhs = CyclotomicElement::from_rational(
        lhs.level(),
        core_arith::Rational::from_int(sign * i64::from(chi.conductor())),
    );
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::make_character;
    use core_arith::Rational;

    #[test]
    fn quadratic_mod_three_squares_to_minus_three() {
        let chi = make_character(3, 2, &[1]).unwrap();
        let g = gauss_sum(&chi).unwrap();
        let sq = g.mul(&g);
        assert_eq!(sq.to_rational(), Some(Rational::from_int(-3)));
    }

    #[test]
    fn quadratic_mod_five_squares_to_five() {
        // (Z/5)^x generated by 2; the quadratic character sends 2 to -1.
        let chi = make_character(5, 2, &[1]).unwrap();
        let g = gauss_sum(&chi).unwrap();
        assert_eq!(g.mul(&g).to_rational(), Some(Rational::from_int(5)));
    }

    #[test]
    fn empty_modulus_sum_is_one() {
        let chi = make_character(1, 1, &[]).unwrap();
        assert_eq!(gauss_sum(&chi).unwrap(), CyclotomicElement::one(1));
    }

    #[test]
    fn non_primitive_input_is_an_error() {
        let chi = make_character(3, 2, &[1]).unwrap().induce(12);
        assert!(matches!(gauss_sum(&chi), Err(CharError::NotPrimitive(12, 3))));
    }

    #[test]
    fn pair_identity_on_named_examples() {
        for (n, order, images) in [(3u32, 2u32, vec![1u32]), (5, 4, vec![1]), (1, 1, vec![])] {
            let chi = make_character(n, order, &images).unwrap();
            assert!(epsilon_pair_check(&chi).unwrap(), "mod {n}");
        }
    }

    #[test]
    fn gauss_sum_level_is_computed() {
        // Order-4 character mod 5: value lives at level lcm(4,5) = 20.
        let chi = make_character(5, 4, &[1]).unwrap();
        let gs = GaussSum::new(&chi).unwrap();
        assert_eq!(gs.level(), 20);
        assert_eq!(gs.value.level(), 20);
    }
}
