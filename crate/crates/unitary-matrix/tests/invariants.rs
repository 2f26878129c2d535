//! Cross-module invariants: membership survives products, embeddings, and
//! coordinate transports; the symbolic block identities hold at every
//! supported small size; the decision procedures agree with elements built
//! from generators; reports survive serialization.

use core_arith::{Conjugate, Matrix, Rational, Ring};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unitary_matrix::doubling::lift_poly;
use unitary_matrix::forms::{
    corner_unipotent, full_unipotent, levi_member, similitude_scale, weyl_flip,
};
use unitary_matrix::weyl::weyl_block_identity_check_with;
use unitary_matrix::{
    automorphy_factorization_check, bruhat_cell_report, canonical_zeta, cocycle_check,
    conjugation_transport_check, diagonal_doubled_form, diagonal_transition, group_membership,
    interchange_weyl, mixed_doubled_form, mixed_transition, record_product_check,
    rl_base_point_check, rl_identity_check, root2_transport_check, signature_form,
    standard_doubled_form, unit_tau, unit_zeta, weyl_block_identity_check, DoublingArrangement,
    IQElement, IQMatrixData, UmatError,
};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_gauss(rng: &mut ChaCha8Rng) -> IQElement {
    IQElement::gauss_int(rng.gen_range(-2..=2), rng.gen_range(-2..=2))
}

/// Unit-triangular times unit-triangular: invertible by construction.
fn rand_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<IQElement> {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rand_gauss(rng));
            upper.set(j, i, rand_gauss(rng));
        }
    }
    lower.mul(&upper)
}

fn rand_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Matrix<IQElement> {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, IQElement::from_int(rng.gen_range(-3..=3)));
        for j in (i + 1)..n {
            let e = rand_gauss(rng);
            m.set(j, i, e.conjugate());
            m.set(i, j, e);
        }
    }
    m
}

/// Diagonal with entries of norm one, so it preserves any diagonal middle
/// form entrywise.
fn rand_unit_diagonal(rng: &mut ChaCha8Rng, a: usize) -> Matrix<IQElement> {
    let units = [
        IQElement::one(),
        IQElement::from_int(-1),
        IQElement::i(),
        IQElement::i().neg(),
    ];
    let mut m = Matrix::identity(a);
    for i in 0..a {
        m.set(i, i, units[rng.gen_range(0..4)].clone());
    }
    m
}

/// A random similitude-one member of the group of `signature_form(s + a, s,
/// zeta)`, built as a short product of generators.
fn random_member(rng: &mut ChaCha8Rng, s: usize, zeta: &[IQElement]) -> Matrix<IQElement> {
    let a = zeta.len();
    let mut g = Matrix::identity(2 * s + a);
    for _ in 0..4 {
        let factor = match rng.gen_range(0..4) {
            0 => levi_member(&rand_invertible(rng, s), &rand_unit_diagonal(rng, a), zeta)
                .expect("constructed Levi data is valid"),
            1 => {
                let mut mid = Matrix::zeros(a, s);
                for i in 0..a {
                    for j in 0..s {
                        mid.set(i, j, rand_gauss(rng));
                    }
                }
                full_unipotent(&mid, &rand_hermitian(rng, s), zeta)
                    .expect("constructed unipotent data is valid")
            }
            2 => corner_unipotent(&rand_hermitian(rng, s), a)
                .expect("constructed corner data is valid"),
            _ => weyl_flip(s, a),
        };
        g = g.mul(&factor);
    }
    g
}

#[test]
fn generator_products_are_members_with_similitude_one() {
    let mut rng = rng(11);
    for (r, s) in [(1usize, 1usize), (2, 1), (3, 1), (2, 2)] {
        let zeta = canonical_zeta(r - s);
        let theta = signature_form(r, s, &zeta).unwrap();
        for _ in 0..25 {
            let g = random_member(&mut rng, s, &zeta);
            let report = group_membership(&g, &theta).unwrap();
            assert!(report.is_member(), "generator product left the group at ({r}, {s})");
            assert_eq!(report.similitude(), Some(&IQElement::one()));
        }
    }
}

#[test]
fn embedded_member_pairs_preserve_the_assembled_form() {
    let mut rng = rng(23);
    for (a, b) in [(0usize, 1usize), (1, 1), (2, 1)] {
        let zeta = canonical_zeta(a);
        let arr = DoublingArrangement::mixed(a, b);
        let theta_big = signature_form(a + b + 1, b + 1, &zeta).unwrap();
        let theta_small = signature_form(a + b, b, &zeta).unwrap();
        let assembled = arr.assembled_form(&theta_big, &theta_small).unwrap();
        assert_eq!(assembled, mixed_doubled_form(a, b, &zeta).unwrap());
        for _ in 0..10 {
            let g = random_member(&mut rng, b + 1, &zeta);
            let h = random_member(&mut rng, b, &zeta);
            let image = arr.embed_members(&g, &h, &theta_big, &theta_small).unwrap();
            let report = group_membership(&image, &assembled).unwrap();
            assert!(report.is_member(), "embedded pair left the assembled group at ({a}, {b})");
            assert_eq!(report.similitude(), Some(&IQElement::one()));
        }
    }
}

#[test]
fn embedding_rejects_non_members_and_detects_scale_mismatch() {
    let mut rng = rng(37);
    let (a, b) = (1usize, 1usize);
    let zeta = canonical_zeta(a);
    let arr = DoublingArrangement::mixed(a, b);
    let theta_big = signature_form(a + b + 1, b + 1, &zeta).unwrap();
    let theta_small = signature_form(a + b, b, &zeta).unwrap();

    // A tampered first factor is rejected outright.
    let mut bad = random_member(&mut rng, b + 1, &zeta);
    bad.set(0, 0, bad.get(0, 0).add(&IQElement::one()));
    let h = random_member(&mut rng, b, &zeta);
    assert!(matches!(
        arr.embed_members(&bad, &h, &theta_big, &theta_small),
        Err(UmatError::NotInGroup)
    ));

    // Mismatched similitudes embed fine factor-by-factor but the image no
    // longer preserves the assembled form.
    let scaled = random_member(&mut rng, b + 1, &zeta)
        .mul(&similitude_scale(b + 1, a, &Rational::from_int(2)));
    let image = arr.embed_members(&scaled, &h, &theta_big, &theta_small).unwrap();
    let assembled = arr.assembled_form(&theta_big, &theta_small).unwrap();
    assert!(!group_membership(&image, &assembled).unwrap().is_member());
}

#[test]
fn transports_compose_and_carry_members_into_the_standard_group() {
    let mut rng = rng(41);
    for (a, b) in [(0usize, 1usize), (1, 1)] {
        let n = a + 2 * b;
        let zeta = unit_zeta(a);
        let theta_mixed = mixed_doubled_form(a, b, &zeta).unwrap();
        let theta_std = standard_doubled_form(n + 1);
        let theta_diag = diagonal_doubled_form(a, b);

        let s_mixed = mixed_transition(a, b, &zeta).unwrap();
        let c_mixed = conjugation_transport_check(&s_mixed, &theta_mixed, &theta_std)
            .expect("mixed transition transports the form");

        let s_diag = diagonal_transition(a, b, &unit_tau(a)).unwrap();
        let c_diag = root2_transport_check(&s_diag, &theta_diag, &theta_mixed)
            .expect("diagonal transition transports the definite form");

        // Transitivity: the composite transports with the product scalar.
        let composite = s_diag.mul(&lift_poly(&s_mixed));
        assert_eq!(
            root2_transport_check(&composite, &theta_diag, &theta_std),
            Some(c_diag.mul(&c_mixed))
        );

        // Conjugation by the transition carries embedded members into the
        // standard group with the same similitude.
        let arr = DoublingArrangement::mixed(a, b);
        let theta_big = signature_form(a + b + 1, b + 1, &zeta).unwrap();
        let theta_small = signature_form(a + b, b, &zeta).unwrap();
        let s_inv = s_mixed.inverse().expect("transition is invertible");
        for _ in 0..5 {
            let g = random_member(&mut rng, b + 1, &zeta);
            let h = random_member(&mut rng, b, &zeta);
            let image = arr.embed_members(&g, &h, &theta_big, &theta_small).unwrap();
            let moved = s_inv.mul(&image).mul(&s_mixed);
            let report = group_membership(&moved, &theta_std).unwrap();
            assert!(report.is_member(), "transported member left the standard group");
            assert_eq!(report.similitude(), Some(&IQElement::one()));
        }
    }
}

#[test]
fn frame_mixing_identity_holds_at_all_supported_sizes() {
    assert!(rl_identity_check(1, 1, &canonical_zeta(0)).unwrap());
    assert!(rl_identity_check(2, 1, &canonical_zeta(1)).unwrap());
    // The identity is not tied to one middle diagonal.
    assert!(rl_identity_check(2, 1, &[IQElement::gauss_int(0, 4)]).unwrap());
    for (r, s) in [(1usize, 1usize), (2, 1), (3, 1)] {
        assert!(rl_base_point_check(r, s, &canonical_zeta(r - s)).unwrap());
    }
}

#[test]
fn interchange_identity_holds_and_needs_the_right_permutation() {
    for (a, b) in [(0usize, 1usize), (1, 1), (2, 1), (1, 2)] {
        assert!(weyl_block_identity_check(a, b), "interchange identity failed at ({a}, {b})");
    }
    let n = 1 + 2 * 1;
    assert!(!weyl_block_identity_check_with(1, 1, &Matrix::identity(n + 2)));
    assert!(!weyl_block_identity_check_with(1, 1, &interchange_weyl(1, 1).transpose()));
}

#[test]
fn coordinate_change_products_factor_as_recorded() {
    for (a, b) in [(1usize, 1usize), (2, 1)] {
        let zeta = canonical_zeta(a);
        assert!(record_product_check(a, b, &zeta).unwrap());
        assert!(automorphy_factorization_check(a, b, &zeta).unwrap());
    }
    // Again with a different valid middle diagonal.
    let other = vec![IQElement::gauss_int(0, 4), IQElement::gauss_int(0, 10)];
    assert!(record_product_check(2, 1, &other).unwrap());
    assert!(automorphy_factorization_check(2, 1, &other).unwrap());
}

#[test]
fn factor_of_automorphy_satisfies_the_cocycle_rule_on_random_members() {
    let mut rng = rng(53);
    for m in [1usize, 2] {
        let point = Matrix::<IQElement>::identity(m).scalar_mul(&IQElement::i());
        let mut checked = 0usize;
        let mut attempts = 0usize;
        while checked < 12 {
            attempts += 1;
            assert!(attempts < 200, "random members kept hitting singular denominators");
            let g = random_member(&mut rng, m, &[]);
            let h = random_member(&mut rng, m, &[]);
            match cocycle_check(&g, &h, &point) {
                Ok(ok) => {
                    assert!(ok, "cocycle rule failed on a random member pair of size {m}");
                    checked += 1;
                }
                Err(UmatError::Singular(_)) => continue,
                Err(e) => panic!("unexpected error: {e}"),
            }
        }
    }
}

/// `q` upper block-triangular member times flip times integral shift: the
/// cell test must accept, and must reject exactly the prime dividing a
/// denominator planted in the shift.
#[test]
fn random_cell_products_are_decided_exactly() {
    let mut rng = rng(67);
    for ell in [2u64, 3, 5] {
        for iter in 0..200 {
            let n = 1 + (iter % 3);
            let theta = standard_doubled_form(n);
            let q = levi_member(&rand_invertible(&mut rng, n), &Matrix::identity(0), &[])
                .unwrap()
                .mul(&corner_unipotent(&rand_hermitian(&mut rng, n), 0).unwrap());
            let flip = weyl_flip(n, 0);
            let mut shift = rand_hermitian(&mut rng, n);
            for i in 0..n {
                for j in 0..n {
                    shift.set(i, j, shift.get(i, j).scale(&Rational::from_int(3)));
                }
            }
            let g = q.mul(&flip).mul(&corner_unipotent(&shift, 0).unwrap());
            assert!(group_membership(&g, &theta).unwrap().is_member());
            let report = bruhat_cell_report(&g, ell).unwrap();
            assert!(report.in_cell(), "integral cell product rejected at {ell}");

            // Plant a denominator: rejected at `ell`, accepted elsewhere.
            let mut off = shift.clone();
            off.set(0, 0, off.get(0, 0).add(&IQElement::from_ratio(1, ell as i64)));
            let g_off = q.mul(&flip).mul(&corner_unipotent(&off, 0).unwrap());
            for other in [2u64, 3, 5, 7] {
                let r = bruhat_cell_report(&g_off, other).unwrap();
                assert_eq!(r.in_cell(), other != ell);
                assert!(r.corner_invertible);
            }
        }
    }
}

#[test]
fn reports_and_matrices_round_trip_through_json() {
    let mut rng = rng(79);
    let zeta = canonical_zeta(1);
    let g = random_member(&mut rng, 1, &zeta);
    let data = IQMatrixData::from_matrix(&g).unwrap();
    let text = serde_json::to_string(&data).unwrap();
    let back: IQMatrixData = serde_json::from_str(&text).unwrap();
    assert_eq!(back.to_matrix().unwrap(), g);

    let theta = signature_form(2, 1, &zeta).unwrap();
    let member = serde_json::to_value(group_membership(&g, &theta).unwrap()).unwrap();
    assert_eq!(member["status"], "member");
    let mut stretched = Matrix::identity(3);
    stretched.set(0, 0, IQElement::from_int(2));
    let non = serde_json::to_value(group_membership(&stretched, &theta).unwrap()).unwrap();
    assert_eq!(non["status"], "not-member");

    let cell = serde_json::to_value(bruhat_cell_report(&standard_doubled_form(2).neg(), 3).unwrap()).unwrap();
    assert_eq!(cell["prime"], 3);
    assert!(cell["corner_invertible"].as_bool().unwrap());
}

proptest! {
    /// Membership is closed under products and the similitude is
    /// multiplicative along them.
    #[test]
    fn membership_is_closed_under_products(choices in prop::collection::vec((0u8..5, -2i64..=2, -2i64..=2, 1i64..=3), 1..5)) {
        let zeta = canonical_zeta(1);
        let theta = signature_form(2, 1, &zeta).unwrap();
        let mut g = Matrix::identity(3);
        let mut mu = IQElement::one();
        for &(kind, p, q, d) in &choices {
            let factor = match kind {
                0 => {
                    let entry = IQElement::gauss(Rational::ratio(p, d), Rational::ratio(q, d));
                    if entry.is_zero() {
                        continue;
                    }
                    levi_member(&Matrix::from_rows(vec![vec![entry]]), &Matrix::identity(1), &zeta).unwrap()
                }
                1 => corner_unipotent(&Matrix::from_rows(vec![vec![IQElement::from_ratio(p, d)]]), 1).unwrap(),
                2 => full_unipotent(
                    &Matrix::from_rows(vec![vec![IQElement::gauss_int(p, q)]]),
                    &Matrix::from_rows(vec![vec![IQElement::from_int(q)]]),
                    &zeta,
                ).unwrap(),
                3 => weyl_flip(1, 1),
                _ => {
                    let lambda = Rational::ratio(d, 1);
                    mu = mu.mul(&IQElement::rational(lambda.mul(&lambda)));
                    similitude_scale(1, 1, &lambda)
                }
            };
            g = g.mul(&factor);
        }
        let report = group_membership(&g, &theta).unwrap();
        prop_assert!(report.is_member());
        prop_assert_eq!(report.similitude(), Some(&mu));
    }
}
