mod common;

use common::{comp, part, ssyt_count};
use polrep::combinat::{enumerate_compositions, enumerate_partitions};
use polrep::weyl::{
    dual_reflection_check, fusion_dim, fusion_dim_check, irr_weight_multiplicities,
    reflected_weyl_dim, weyl_dimension, weyl_graded_character, weyl_weight_graded_dim,
};
use polrep::{Composition, Partition, TPoly};
use proptest::prelude::*;

#[test]
fn fusion_for_five_boxes() {
    let l = part(&[5, 0, 0]);
    assert_eq!(fusion_dim(&l), 243);
    assert_eq!(weyl_graded_character(&l).unwrap().total_dim(), 243);
}

#[test]
fn reversed_series_for_the_second_example() {
    let w = weyl_weight_graded_dim(&part(&[5, 0, 0]), &comp(&[3, 1, 1])).unwrap();
    assert_eq!(w, TPoly::from_coeffs(&[1, 2, 3, 4, 4, 3, 2, 1]));
    assert_eq!(
        reflected_weyl_dim(&part(&[5, 0, 0]), &comp(&[3, 1, 1])).unwrap(),
        w
    );
}

#[test]
fn weyl_dimension_counts_tableaux() {
    for n in 1..=4 {
        for total in 0..=5 {
            for tau in enumerate_partitions(n, total) {
                let count: u64 = enumerate_compositions(n, total)
                    .iter()
                    .map(|nu| ssyt_count(tau.parts(), nu.parts()))
                    .sum();
                assert_eq!(weyl_dimension(&tau), count, "tau={tau}");
                assert_eq!(irr_weight_multiplicities(&tau).values().sum::<u64>(), count);
            }
        }
    }
}

#[test]
fn character_table_layout() {
    let table = weyl_graded_character(&part(&[2, 1, 0])).unwrap();
    let doc = serde_json::to_value(&table).unwrap();
    assert_eq!(doc["lambda"], "2,1,0");
    assert_eq!(doc["entries"][3]["nu"], "1,1,1");
    assert_eq!(
        doc["entries"][3]["dim"],
        serde_json::json!([[0, 2], [1, 1]])
    );
    let names: Vec<&Composition> = table.entries.iter().map(|e| &e.nu).collect();
    assert!(names.windows(2).all(|w| w[0] < w[1]));
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=3, 0u32..=5)
        .prop_flat_map(|(n, total)| prop::sample::select(enumerate_partitions(n, total)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn duality_and_fusion(l in partition()) {
        prop_assert!(fusion_dim_check(&l).unwrap());
        for nu in enumerate_compositions(l.n(), l.total()) {
            prop_assert!(dual_reflection_check(&l, &nu).unwrap(), "nu={}", nu);
        }
    }

    #[test]
    fn weight_spaces_are_permutation_invariant(l in partition(), seed in any::<prop::sample::Index>()) {
        let weights = enumerate_compositions(l.n(), l.total());
        let nu = &weights[seed.index(weights.len())];
        let mut rev = nu.parts().to_vec();
        rev.reverse();
        prop_assert_eq!(weyl_weight_graded_dim(&l, nu).unwrap(), weyl_weight_graded_dim(&l, &Composition::from(rev)).unwrap());
    }
}
