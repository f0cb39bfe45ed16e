mod common;

use common::comp;
use polrep::combinat::enumerate_compositions;
use polrep::current::h_multiplier;
use polrep::theta::{bubble_image, pi_image, real_bubble, Orientation, Via};
use polrep::verify::{theta_suite, Grid};
use polrep::MPoly;
use proptest::prelude::*;

#[test]
fn relation_suite_on_small_weights() {
    for (n, total) in [(2, 2), (3, 2), (3, 3)] {
        for c in theta_suite(Grid {
            n,
            total,
            cutoff: 0,
            jmax: 0,
        }) {
            assert!(
                c.passed || !c.gating,
                "n={n} N={total} {}: {:?}",
                c.name,
                c.witness
            );
        }
    }
}

#[test]
fn low_degree_bubbles() {
    let nu = comp(&[2, 1]);
    for o in [Orientation::Cw, Orientation::Ccw] {
        assert_eq!(bubble_image(1, &nu, 0, o), MPoly::one(3));
        assert!(bubble_image(1, &nu, -1, o).is_zero());
        assert!(bubble_image(1, &nu, -3, o).is_zero());
    }
}

#[test]
fn alternating_sign_form_fails_at_even_degree() {
    // p_2 of one block minus p_2 of the other, with no sign flip
    let nu = comp(&[1, 1]);
    let want = &MPoly::var_pow(2, 0, 2) - &MPoly::var_pow(2, 1, 2);
    assert_eq!(pi_image(1, 2, &nu), want);
}

#[test]
fn real_bubbles_exist_in_both_directions() {
    let nu = comp(&[1, 2]);
    for via in [Via::Plus, Via::Minus] {
        assert!(real_bubble(1, &nu, 0, via).is_some());
    }
}

proptest! {
    #[test]
    fn pi_is_the_power_sum_difference(n in 2usize..=4, total in 0u32..=5, pick in any::<prop::sample::Index>(), j in 0u32..=5) {
        let weights = enumerate_compositions(n, total);
        let nu = &weights[pick.index(weights.len())];
        for i in 1..n {
            prop_assert_eq!(pi_image(i, j, nu), h_multiplier(i, j, nu));
        }
    }

    #[test]
    fn grassmannian_relation(n in 2usize..=3, total in 0u32..=5, pick in any::<prop::sample::Index>(), r in 1i64..=6) {
        let weights = enumerate_compositions(n, total);
        let nu = &weights[pick.index(weights.len())];
        let mut acc = MPoly::zero(total as usize);
        for a in 0..=r {
            acc += &(&bubble_image(1, nu, a, Orientation::Cw) * &bubble_image(1, nu, r - a, Orientation::Ccw));
        }
        prop_assert!(acc.is_zero());
    }
}
