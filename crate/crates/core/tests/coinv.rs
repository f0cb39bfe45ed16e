mod common;

use common::{comp, part};
use polrep::coinv::{
    check_descent, coinv_graded_dim_both, coinv_graded_dim_formula, coinv_graded_dim_linear,
    ideal_generators, GradedIdeal,
};
use polrep::combinat::{
    degree_gap, dominance_leq, enumerate_compositions, enumerate_partitions, t_multinomial,
};
use polrep::sympoly::graded_basis;
use polrep::weyl::fusion_dim;
use polrep::{Partition, TPoly};
use proptest::prelude::*;

#[test]
fn first_worked_example() {
    let want = TPoly::from_coeffs(&[1, 2, 4, 3, 2]);
    let got = coinv_graded_dim_both(&part(&[5, 2, 1, 1]), &comp(&[3, 1, 2, 3])).unwrap();
    assert_eq!(got, Ok(want));
}

#[test]
fn second_worked_example() {
    let nu = comp(&[3, 1, 1]);
    let want = TPoly::from_coeffs(&[1, 2, 3, 4, 4, 3, 2, 1]);
    assert_eq!(t_multinomial(5, &nu).unwrap(), want);
    assert_eq!(
        coinv_graded_dim_both(&part(&[5, 0, 0]), &nu).unwrap(),
        Ok(want)
    );
}

#[test]
fn extreme_weight_gives_quantum_multinomial() {
    for n in 1..=3 {
        for total in 0..=5 {
            let mut top = vec![0; n];
            top[0] = total;
            let l = part(&top);
            for nu in enumerate_compositions(n, total) {
                assert_eq!(
                    coinv_graded_dim_linear(&l, &nu).unwrap(),
                    t_multinomial(total, &nu).unwrap(),
                    "nu={nu}"
                );
            }
        }
    }
}

#[test]
fn vanishing_follows_sorted_dominance() {
    // the unsorted composition (0,3) is not dominated by (2,1), yet the
    // algebra is non-zero because (3,0) is not dominated either
    let l = part(&[2, 1]);
    assert!(coinv_graded_dim_linear(&l, &comp(&[0, 3]))
        .unwrap()
        .is_zero());
    assert!(coinv_graded_dim_linear(&l, &comp(&[1, 2])).unwrap() == TPoly::one());
    for nu in enumerate_compositions(3, 4) {
        for l in enumerate_partitions(3, 4) {
            let dim = coinv_graded_dim_linear(&l, &nu).unwrap();
            assert_eq!(
                dim.is_zero(),
                !dominance_leq(&nu.sorted(), &l).unwrap(),
                "lambda={l} nu={nu}"
            );
        }
    }
}

#[test]
fn generators_lie_in_the_ideal() {
    let (l, nu) = (part(&[3, 1, 0]), comp(&[1, 2, 1]));
    let mut ideal = GradedIdeal::coinvariant(&l, &nu).unwrap();
    for g in ideal_generators(&l, &nu, 4).unwrap() {
        assert!(ideal.contains(&g.poly));
    }
    // a basis element of degree 1 survives in the quotient
    let survivors = graded_basis(&nu, 1)
        .into_iter()
        .filter(|b| !ideal.contains(&b.poly))
        .count();
    assert!(survivors > 0);
}

#[test]
fn ideal_basis_round_trips_through_coordinates() {
    let (l, nu) = (part(&[2, 2, 0]), comp(&[1, 1, 2]));
    let mut ideal = GradedIdeal::coinvariant(&l, &nu).unwrap();
    for r in 0..=3 {
        for p in ideal.basis(r) {
            let v = ideal.coordinates(&p, r);
            assert_eq!(ideal.polynomial(&v, r), p);
            assert!(ideal.contains(&p));
        }
    }
}

#[test]
fn descent_small() {
    for l in [&[2, 0][..], &[1, 1], &[2, 1, 0]] {
        let l = part(l);
        let report = check_descent(&l, l.n(), l.total(), 1, 3).unwrap();
        assert!(report.passed(), "lambda={l}: {:?}", report.failures.first());
        assert!(report.checked > 0);
    }
}

fn pair() -> impl Strategy<Value = (Partition, polrep::Composition)> {
    (1usize..=3, 0u32..=5).prop_flat_map(|(n, total)| {
        (
            prop::sample::select(enumerate_partitions(n, total)),
            prop::sample::select(enumerate_compositions(n, total)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn routes_agree((l, nu) in pair()) {
        prop_assert_eq!(coinv_graded_dim_linear(&l, &nu).unwrap(), coinv_graded_dim_formula(&l, &nu).unwrap());
    }

    #[test]
    fn top_degree_is_half_the_gap((l, nu) in pair()) {
        let dim = coinv_graded_dim_linear(&l, &nu).unwrap();
        if dominance_leq(&nu.sorted(), &l).unwrap() {
            prop_assert_eq!(dim.coeff(0), 1);
            let half = degree_gap(&l, &nu).unwrap() / 2;
            prop_assert_eq!(dim.max_exp(), Some(half as i32));
        }
    }
}

#[test]
fn weight_spaces_add_up_to_the_fusion_dimension() {
    for n in 1..=3 {
        for total in 0..=5 {
            for l in enumerate_partitions(n, total) {
                let sum: i64 = enumerate_compositions(n, total)
                    .iter()
                    .map(|nu| coinv_graded_dim_linear(&l, nu).unwrap().eval(1))
                    .sum();
                assert_eq!(sum, fusion_dim(&l) as i64, "lambda={l}");
            }
        }
    }
}
