mod common;

use common::comp;
use polrep::combinat::{
    binomial, degree_gap, dominance_leq, enumerate_compositions, enumerate_partitions,
    t_multinomial, transpose,
};
use polrep::{Composition, Partition};
use proptest::prelude::*;

#[test]
fn parsing_and_validation() {
    assert_eq!("3,1,2".parse::<Composition>().unwrap(), comp(&[3, 1, 2]));
    assert!("1,3".parse::<Partition>().is_err());
    assert!("1,x".parse::<Composition>().is_err());
}

#[test]
fn enumeration_counts() {
    // compositions of N into n parts: C(N + n - 1, n - 1)
    for n in 1..=4 {
        for total in 0..=6u32 {
            assert_eq!(
                enumerate_compositions(n, total).len() as u64,
                binomial(total as u64 + n as u64 - 1, n as u64 - 1)
            );
        }
    }
    assert_eq!(enumerate_partitions(6, 6).len(), 11);
    assert_eq!(enumerate_partitions(3, 6).len(), 7);
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=5, 0u32..=8)
        .prop_flat_map(|(n, total)| prop::sample::select(enumerate_partitions(n, total)))
}

proptest! {
    #[test]
    fn transpose_is_an_involution(l in partition()) {
        let t = transpose(&l);
        prop_assert_eq!(t.total(), l.total());
        prop_assert_eq!(transpose(&t).trimmed(), l.trimmed());
    }

    #[test]
    fn dominance_is_a_partial_order(a in partition(), b in partition(), c in partition()) {
        prop_assert!(dominance_leq(&a, &a).unwrap());
        if a.total() == b.total() && a.n() == b.n() && dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        let same = |x: &Partition, y: &Partition| x.total() == y.total() && x.n() == y.n();
        if same(&a, &b) && same(&b, &c) && dominance_leq(&a, &b).unwrap() && dominance_leq(&b, &c).unwrap() {
            prop_assert!(dominance_leq(&a, &c).unwrap());
        }
    }

    #[test]
    fn transpose_reverses_dominance(a in partition(), b in partition()) {
        if a.total() == b.total() && a.n() == b.n() {
            let len = a.total() as usize;
            let (at, bt) = (transpose(&a).padded(len), transpose(&b).padded(len));
            prop_assert_eq!(dominance_leq(&a, &b).unwrap(), dominance_leq(&bt, &at).unwrap());
        }
    }

    #[test]
    fn quantum_multinomial(parts in prop::collection::vec(0u32..=4, 1..=4)) {
        let nu = Composition::from(parts.clone());
        let total: u32 = parts.iter().sum();
        let q = t_multinomial(total, &nu).unwrap();
        let classical = factorial(total) / parts.iter().map(|&p| factorial(p)).product::<i64>();
        prop_assert_eq!(q.eval(1), classical);
        prop_assert!(q.is_palindromic());
        let top: u32 = (total * total - parts.iter().map(|p| p * p).sum::<u32>()) / 2;
        prop_assert_eq!(q.max_exp(), Some(top as i32));
    }

    #[test]
    fn degree_gap_is_even(l in partition(), pick in any::<prop::sample::Index>()) {
        let weights = enumerate_compositions(l.n(), l.total());
        let nu = &weights[pick.index(weights.len())];
        if dominance_leq(&nu.sorted(), &l).unwrap() {
            prop_assert_eq!(degree_gap(&l, nu).unwrap() % 2, 0);
        }
    }
}
