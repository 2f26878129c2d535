//! Randomized structural invariants of the arithmetic kernel.

use core_arith::{
    padic_log_unit, CyclotomicElement, PadicInt, Rational, Ring, Valuation,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..200).prop_map(|(n, d)| Rational::ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |q| !q.is_zero())
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        // Associativity and commutativity of both operations.
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        // Distributivity.
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // Identities and additive inverse.
        prop_assert_eq!(&a + &Rational::zero(), a.clone());
        prop_assert_eq!(&a * &Rational::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rational_multiplicative_inverse(a in nonzero_rational()) {
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, Rational::one());
    }

    #[test]
    fn padic_product_valuations_add(
        p in prop::sample::select(vec![3u64, 5, 7]),
        a in 1u64..10_000,
        va in 0u32..3,
        b in 1u64..10_000,
        vb in 0u32..3,
    ) {
        // Build x = unit * p^va, y = unit * p^vb explicitly.
        let prec = 12u32;
        let unit_a = if a % p == 0 { a + 1 } else { a };
        let unit_b = if b % p == 0 { b + 1 } else { b };
        let x = PadicInt::new(p, prec, BigUint::from(unit_a) * BigUint::from(p).pow(va));
        let y = PadicInt::new(p, prec, BigUint::from(unit_b) * BigUint::from(p).pow(vb));
        prop_assert_eq!(x.valuation(), Valuation::Exact(va));
        prop_assert_eq!(y.valuation(), Valuation::Exact(vb));
        prop_assert_eq!((&x * &y).valuation(), Valuation::Exact(va + vb));
    }

    #[test]
    fn principal_unit_power_congruence(
        p in prop::sample::select(vec![3u64, 5, 7]),
        k in 0u32..4,
    ) {
        // (1+p)^(p^k) = 1 mod p^(k+1)
        let prec = k + 2;
        let base = PadicInt::from_i64(p, prec, 1 + p as i64);
        let power = base.pow_big(&BigUint::from(p).pow(k));
        let one = PadicInt::one(p, k + 1);
        prop_assert!(power.reduce_precision(k + 1).congruent(&one));
    }

    #[test]
    fn padic_log_is_a_homomorphism(
        p in prop::sample::select(vec![3u64, 5, 7]),
        s in 1i64..500,
        t in 1i64..500,
    ) {
        let prec = 8u32;
        let u = PadicInt::from_i64(p, prec, 1 + p as i64 * s);
        let v = PadicInt::from_i64(p, prec, 1 + p as i64 * t);
        let lhs = padic_log_unit(&(&u * &v)).unwrap();
        let rhs = &padic_log_unit(&u).unwrap() + &padic_log_unit(&v).unwrap();
        prop_assert!(lhs.congruent(&rhs));
    }

    #[test]
    fn cyclotomic_norm_is_multiplicative(
        level in prop::sample::select(vec![3u32, 4, 5, 8, 12]),
        seeds in prop::collection::vec(-5i64..5, 8),
    ) {
        let d = core_arith::euler_phi(level) as usize;
        let a = CyclotomicElement::from_coords(
            level,
            (0..d).map(|i| Rational::from_int(seeds[i % seeds.len()])).collect(),
        );
        let b = CyclotomicElement::from_coords(
            level,
            (0..d).map(|i| Rational::from_int(seeds[(i + 3) % seeds.len()] - 1)).collect(),
        );
        prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn cyclotomic_conjugation_is_an_involution(
        level in prop::sample::select(vec![3u32, 4, 5, 7, 8]),
        seeds in prop::collection::vec(-4i64..4, 8),
    ) {
        let d = core_arith::euler_phi(level) as usize;
        let a = CyclotomicElement::from_coords(
            level,
            (0..d).map(|i| Rational::from_int(seeds[i % seeds.len()])).collect(),
        );
        prop_assert_eq!(a.conj().conj(), a.clone());
        // Conjugation is a ring homomorphism.
        prop_assert_eq!(a.mul(&a).conj(), a.conj().mul(&a.conj()));
    }
}
