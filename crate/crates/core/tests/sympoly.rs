mod common;

use common::comp;
use polrep::combinat::enumerate_compositions;
use polrep::sympoly::{
    check_block_symmetric, free_decompose, free_decompose_linear, gen, graded_basis, graded_dim,
    multi_block, recompose, sym,
};
use polrep::{BlockSymPoly, Composition, Error, Kind, MPoly};
use proptest::prelude::*;

#[test]
fn rejects_non_invariant_polynomials() {
    let nu = comp(&[2, 1]);
    let err = BlockSymPoly::new(MPoly::var(3, 0), nu.clone()).unwrap_err();
    assert_eq!(
        err,
        Error::Symmetry {
            block: 1,
            a: 1,
            b: 2
        }
    );
    assert!(BlockSymPoly::new(MPoly::var(3, 2), nu).is_ok());
}

/// Number of sorted exponent vectors, from `Π_b Π_{k ≤ ν_b} 1/(1 - t^k)`.
fn hilbert_coeff(nu: &Composition, r: u32) -> usize {
    let mut series = vec![0usize; r as usize + 1];
    series[0] = 1;
    for &size in nu.parts() {
        for k in 1..=size as usize {
            for d in k..=r as usize {
                series[d] += series[d - k];
            }
        }
    }
    series[r as usize]
}

#[test]
fn graded_dimensions_match_the_hilbert_series() {
    for n in 1..=3 {
        for total in 0..=5 {
            for nu in enumerate_compositions(n, total) {
                for r in 0..=6 {
                    assert_eq!(graded_dim(&nu, r), hilbert_coeff(&nu, r), "nu={nu} r={r}");
                    assert_eq!(graded_basis(&nu, r).len(), graded_dim(&nu, r));
                }
            }
        }
    }
}

#[test]
fn multi_block_is_the_sum_over_the_union() {
    let nu = comp(&[2, 1, 2]);
    for r in 0..=4 {
        let got = multi_block(Kind::H, r, &nu, &[1, 3]).unwrap().poly;
        assert_eq!(got, sym(Kind::H, r, &[0, 1, 3, 4], 5));
    }
}

proptest! {
    #[test]
    fn e_h_alternating_sum_vanishes(size in 1u32..=4, r in 1i64..=6) {
        let nu = comp(&[size]);
        let mut acc = MPoly::zero(size as usize);
        for l in 0..=r {
            let t = &gen(Kind::E, l, &nu, 1) * &gen(Kind::H, r - l, &nu, 1);
            if l % 2 == 0 { acc += &t } else { acc -= &t }
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn newton_identities(size in 1u32..=4, r in 1i64..=5) {
        // r e_r = Σ_{k=1}^{r} (-1)^{k-1} e_{r-k} p_k
        let nu = comp(&[size]);
        let n = size as usize;
        let mut rhs = MPoly::zero(n);
        for k in 1..=r {
            let t = &gen(Kind::E, r - k, &nu, 1) * &gen(Kind::P, k, &nu, 1);
            if k % 2 == 1 { rhs += &t } else { rhs -= &t }
        }
        prop_assert_eq!(&gen(Kind::E, r, &nu, 1) * &MPoly::constant(n, r), rhs);
    }

    #[test]
    fn generators_are_block_symmetric(parts in prop::collection::vec(0u32..=3, 1..=3), r in 0i64..=4) {
        let nu = Composition::from(parts);
        for b in 1..=nu.n() {
            for kind in [Kind::E, Kind::H, Kind::P] {
                prop_assert!(check_block_symmetric(&gen(kind, r, &nu, b), &nu).is_ok());
            }
        }
    }

    #[test]
    fn free_decompositions_agree(a in 1u32..=3, b in 0u32..=2, r in 0u32..=3, pick in 0usize..64) {
        // P_(a,b) over P_(a-1,b+1), in powers of the last variable of block 1
        let nu = comp(&[a, b]);
        let basis = graded_basis(&nu, r);
        let p = &basis[pick % basis.len()].poly;
        let tgt = comp(&[a - 1, b + 1]);
        let x = a as usize - 1;
        let qs = free_decompose(p, x, &tgt, b as usize + 1).unwrap();
        prop_assert_eq!(&recompose(&qs, x), p);
        prop_assert_eq!(qs, free_decompose_linear(p, x, &tgt, b as usize + 1).unwrap());
    }
}
