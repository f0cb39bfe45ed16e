mod common;

use common::{comp, divide, one_minus, part, ssyt_count};
use polrep::combinat::{enumerate_compositions, enumerate_partitions, transpose};
use polrep::kostka::{kostka_foulkes, kostka_number, p_polynomial};
use polrep::{Partition, TPoly};
use proptest::prelude::*;

#[test]
fn worked_values() {
    let l = part(&[4, 2, 1, 1, 1]);
    assert_eq!(kostka_foulkes(&l, &l).unwrap(), TPoly::one());
    assert_eq!(
        kostka_foulkes(&part(&[2, 1, 1, 1]), &comp(&[1, 1, 1, 1, 1])).unwrap(),
        TPoly::from_coeffs(&[0, 1, 1, 1, 1])
    );
    assert_eq!(
        kostka_foulkes(&part(&[3, 1, 1]), &comp(&[1, 1, 1, 1, 1])).unwrap(),
        TPoly::from_coeffs(&[0, 0, 0, 1, 1, 2, 1, 1])
    );
}

#[test]
fn tableau_number_from_worked_example() {
    assert_eq!(
        kostka_number(&part(&[5, 2, 1, 1]), &comp(&[3, 1, 2, 3])).unwrap(),
        2
    );
}

fn n_of(l: &Partition) -> i32 {
    l.parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i32 * p as i32)
        .sum()
}

/// `K_{λ,(1^N)}(t) = t^{n(λ^T)} Π_i (1 - t^i) / Π_cells (1 - t^{hook})`.
fn standard_oracle(l: &Partition) -> TPoly {
    let lt = transpose(l);
    let mut num = TPoly::one();
    for i in 1..=l.total() as i32 {
        num = &num * &one_minus(i);
    }
    let mut den = TPoly::one();
    for (r, &len) in l.parts().iter().enumerate() {
        for c in 0..len as usize {
            let hook = (len as usize - c) + (lt.parts()[c] as usize - r) - 1;
            den = &den * &one_minus(hook as i32);
        }
    }
    divide(&num, &den).shift(n_of(&lt))
}

#[test]
fn standard_content_matches_hook_formula() {
    for total in 1..=6 {
        for l in enumerate_partitions(total as usize, total) {
            let ones = comp(&vec![1; total as usize]);
            assert_eq!(
                kostka_foulkes(&l, &ones).unwrap(),
                standard_oracle(&l),
                "lambda={l}"
            );
        }
    }
}

#[test]
fn value_at_zero_is_kronecker_delta() {
    for l in enumerate_partitions(4, 5) {
        for m in enumerate_partitions(4, 5) {
            let k = kostka_foulkes(&l, &m).unwrap();
            assert_eq!(k.coeff(0), i64::from(l == m), "lambda={l} mu={m}");
        }
    }
}

#[test]
fn p_polynomial_counts_root_decompositions() {
    // α1 + α2 = (e1 - e2) + (e2 - e3) or e1 - e3
    assert_eq!(p_polynomial(&[1, 0, -1]), TPoly::from_coeffs(&[0, 1, 1]));
    assert_eq!(p_polynomial(&[1, 1, -2]), TPoly::from_coeffs(&[0, 0, 1, 1]));
    assert!(p_polynomial(&[0, 1, -1, 1]).is_zero());
}

fn shape_and_content() -> impl Strategy<Value = (Partition, Vec<u32>)> {
    (1usize..=4, 0u32..=7).prop_flat_map(|(n, total)| {
        let parts = enumerate_partitions(n, total);
        let weights = enumerate_compositions(n, total);
        (prop::sample::select(parts), prop::sample::select(weights))
            .prop_map(|(l, nu)| (l, nu.parts().to_vec()))
    })
}

proptest! {
    #[test]
    fn tableau_counts_match_brute_force((l, nu) in shape_and_content()) {
        let want = ssyt_count(l.parts(), &nu);
        prop_assert_eq!(kostka_number(&l, &comp(&nu)).unwrap(), want);
        prop_assert_eq!(kostka_foulkes(&l, &comp(&nu)).unwrap().eval(1), want as i64);
    }

    #[test]
    fn nonnegative_and_stable((l, nu) in shape_and_content(), m in 1u32..=3) {
        let mu = comp(&nu).sorted();
        let k = kostka_foulkes(&l, &mu).unwrap();
        prop_assert!(k.has_nonnegative_coeffs());
        prop_assert_eq!(kostka_foulkes(&l.shifted(m), &mu.shifted(m)).unwrap(), k);
    }
}
