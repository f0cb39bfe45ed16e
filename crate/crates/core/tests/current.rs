mod common;

use common::comp;
use polrep::combinat::enumerate_compositions;
use polrep::current::{
    apply, apply_e, apply_e_pushpull, apply_f, apply_f_pushpull, commutator, h_multiplier,
    h_multiplier_alt, GeneratorSymbol as G, WeightVector,
};
use polrep::sympoly::graded_basis;
use polrep::verify::{current_suite, Grid};
use polrep::{Composition, MPoly};
use proptest::prelude::*;

#[test]
fn relations_on_small_weights() {
    for (n, total) in [(2, 2), (2, 3), (3, 3)] {
        for c in current_suite(Grid {
            n,
            total,
            cutoff: 2,
            jmax: 2,
        }) {
            assert!(c.passed, "n={n} N={total} {}: {:?}", c.name, c.witness);
        }
    }
}

#[test]
fn e_then_f_on_the_unit() {
    // F_{1,0} E_{1,0} 1 in P_(1,1): E lands in P_(2,0), F comes back
    let nu = comp(&[1, 1]);
    let one = WeightVector::new(nu.clone(), MPoly::one(2));
    let up = apply_e(1, 0, &one);
    assert_eq!(up.nu, Some(comp(&[2, 0])));
    let back = apply_f(1, 0, &up);
    let other = apply_e(1, 0, &apply_f(1, 0, &one));
    // [E,F] = H_{1,0} acts by ν_1 - ν_2 = 0
    assert!(other.sub(&back).is_zero());
}

#[test]
fn leaving_the_weight_lattice_gives_zero() {
    let v = WeightVector::new(comp(&[0, 2]), MPoly::one(2));
    assert!(apply_f(1, 0, &v).is_zero());
    assert!(apply(G::e(2, 0), &v).is_zero());
}

#[test]
fn alternating_sign_multiplier_agrees_for_odd_degree_only() {
    let nu = comp(&[1, 1]);
    for j in 1..=5 {
        let same = h_multiplier(1, j, &nu) == h_multiplier_alt(1, j, &nu);
        assert_eq!(same, j % 2 == 1, "j={j}");
    }
}

fn vector() -> impl Strategy<Value = (Composition, MPoly)> {
    (2usize..=3, 1u32..=4, 0u32..=3, any::<prop::sample::Index>()).prop_map(|(n, total, r, idx)| {
        let weights = enumerate_compositions(n, total);
        let nu = weights[idx.index(weights.len())].clone();
        let basis = graded_basis(&nu, r);
        let p = basis[idx.index(basis.len())].poly.clone();
        (nu, p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closed_formulas_match_push_pull((nu, p) in vector(), j in 0u32..=2) {
        let v = WeightVector::new(nu.clone(), p);
        for i in 1..nu.n() {
            prop_assert!(apply_f(i, j, &v).same(&apply_f_pushpull(i, j, &v)));
            prop_assert!(apply_e(i, j, &v).same(&apply_e_pushpull(i, j, &v)));
        }
    }

    #[test]
    fn e_f_commutator_is_h((nu, p) in vector(), r in 0u32..=2, s in 0u32..=2) {
        let v = WeightVector::new(nu.clone(), p);
        for i in 1..nu.n() {
            for j in 1..nu.n() {
                let got = commutator(G::e(i, r), G::f(j, s), &v);
                let want = if i == j { apply(G::h(i, r + s), &v) } else { WeightVector::empty() };
                prop_assert!(got.same(&want), "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn action_is_additive((nu, p) in vector(), j in 0u32..=2) {
        let q = graded_basis(&nu, 1).first().map(|b| b.poly.clone()).unwrap_or_else(|| MPoly::one(nu.total() as usize));
        let (vp, vq) = (WeightVector::new(nu.clone(), p), WeightVector::new(nu.clone(), q));
        for g in [G::e(1, j), G::f(1, j), G::h(1, j)] {
            let lhs = apply(g, &vp.add(&vq));
            prop_assert!(lhs.same(&apply(g, &vp).add(&apply(g, &vq))));
        }
    }
}
