//! Weyl-module characters against the coinvariant quotients.

use crate::coinv::align;
use crate::combinat::{
    degree_gap, dominance_leq, enumerate_compositions, enumerate_partitions, Composition, Partition,
};
use crate::tpoly::TPoly;
use crate::weyl::{
    dual_reflection_check, fusion_dim, fusion_dim_check, irr_weight_multiplicities, weyl_dimension,
    weyl_graded_character, weyl_weight_graded_dim,
};

use super::{Check, Grid};

const SHIFTS: u32 = 2;

pub fn weyl_suite(grid: Grid) -> Vec<Check> {
    let parts = enumerate_partitions(grid.n, grid.total);
    let weights = enumerate_compositions(grid.n, grid.total);
    let mixed: Vec<(Partition, Composition)> = parts
        .iter()
        .flat_map(|l| weights.iter().map(move |nu| (l.clone(), nu.clone())))
        .collect();
    let mut out = Vec::new();

    out.push(Check::run("dual reflection", &mixed, |(l, nu)| {
        (!dual_reflection_check(l, nu).unwrap()).then(|| format!("lambda={l} nu={nu}"))
    }));

    out.push(Check::run("fusion dimension", &parts, |l| {
        (!fusion_dim_check(l).unwrap()).then(|| {
            let t = weyl_graded_character(l).unwrap();
            format!("lambda={l}: {} vs {}", t.total_dim(), fusion_dim(l))
        })
    }));

    out.push(Check::run(
        "highest weight and top degree",
        &mixed,
        |(l, nu)| {
            let w = weyl_weight_graded_dim(l, nu).unwrap();
            if l.as_composition() == nu && w != TPoly::one() {
                return Some(format!("lambda={l}: {w}"));
            }
            let l = align(l, nu.n()).unwrap();
            if dominance_leq(&nu.sorted(), &l).unwrap() {
                let half = (degree_gap(&l, nu).unwrap() / 2) as i32;
                if w.max_exp() != Some(half) {
                    return Some(format!("lambda={l} nu={nu}: {w} (d/2={half})"));
                }
            } else if !w.is_zero() {
                return Some(format!("lambda={l} nu={nu}: {w} should vanish"));
            }
            None
        },
    ));

    out.push(Check::run(
        "tables depend on the sl_n weight only",
        &parts,
        |l| {
            let t = weyl_graded_character(l).unwrap();
            for s in 1..=SHIFTS {
                let ts = weyl_graded_character(&l.shifted(s)).unwrap();
                let shifted: Vec<_> = t
                    .entries
                    .iter()
                    .map(|e| (e.nu.shifted(s), e.dim.clone()))
                    .collect();
                let got: Vec<_> = ts
                    .entries
                    .iter()
                    .map(|e| (e.nu.clone(), e.dim.clone()))
                    .collect();
                if got != shifted {
                    return Some(format!("lambda={l} shift {s}"));
                }
            }
            None
        },
    ));

    out.push(Check::run(
        "weight multiplicities sum to the Weyl dimension",
        &parts,
        |tau| {
            let sum: u64 = irr_weight_multiplicities(tau).values().sum();
            let want = weyl_dimension(tau);
            (sum != want).then(|| format!("tau={tau}: {sum} vs {want}"))
        },
    ));
    out
}
