//! Kostka–Foulkes polynomials against tableau counts, plus stability.

use crate::combinat::{
    dominance_leq, enumerate_compositions, enumerate_partitions, transpose, Composition, Partition,
};
use crate::kostka::{kostka_foulkes, kostka_number};
use crate::tpoly::TPoly;

use super::{Check, Grid};

const SHIFTS: u32 = 3;

/// The three worked values.
pub fn reference_values() -> Vec<(Partition, Composition, TPoly)> {
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    let c = |v: &[u32]| Composition::from(v);
    vec![
        (p(&[4, 2, 1, 1, 1]), c(&[4, 2, 1, 1, 1]), TPoly::one()),
        (
            p(&[2, 1, 1, 1]),
            c(&[1, 1, 1, 1, 1]),
            TPoly::from_coeffs(&[0, 1, 1, 1, 1]),
        ),
        (
            p(&[3, 1, 1]),
            c(&[1, 1, 1, 1, 1]),
            TPoly::from_coeffs(&[0, 0, 0, 1, 1, 2, 1, 1]),
        ),
    ]
}

pub fn kostka_suite(grid: Grid) -> Vec<Check> {
    let parts = enumerate_partitions(grid.n, grid.total);
    let weights = enumerate_compositions(grid.n, grid.total);
    let mixed: Vec<(Partition, Composition)> = parts
        .iter()
        .flat_map(|l| weights.iter().map(move |nu| (l.clone(), nu.clone())))
        .collect();
    let pp: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone())))
        .collect();
    let mut out = Vec::new();

    out.push(Check::run("K(1) = tableau count", &mixed, |(l, nu)| {
        let a = kostka_foulkes(l, nu).unwrap().eval(1);
        let b = kostka_number(l, nu).unwrap();
        (a != b as i64).then(|| format!("lambda={l} mu={nu}: {a} vs {b}"))
    }));

    out.push(Check::run(
        "worked values",
        &reference_values(),
        |(l, m, want)| {
            let got = kostka_foulkes(l, m).unwrap();
            (&got != want).then(|| format!("lambda={l} mu={m}: {got}"))
        },
    ));

    out.push(Check::run(
        "nonnegative, nonzero iff dominated",
        &pp,
        |(l, m)| {
            let k = kostka_foulkes(l, m).unwrap();
            let dom = dominance_leq(m, l).unwrap();
            (!k.has_nonnegative_coeffs() || dom == k.is_zero())
                .then(|| format!("lambda={l} mu={m}: {k}"))
        },
    ));

    out.push(Check::run("stability", &pp, |(l, m)| {
        let k = kostka_foulkes(l, m).unwrap();
        let kt = kostka_foulkes(&transpose(m), &transpose(l)).unwrap();
        for s in 1..=SHIFTS {
            let (ls, ms) = (l.shifted(s), m.shifted(s));
            let got = kostka_foulkes(&ls, &ms).unwrap();
            if got != k {
                return Some(format!("lambda={l} mu={m} shift {s}: {got} vs {k}"));
            }
            let got = kostka_foulkes(&transpose(&ms), &transpose(&ls)).unwrap();
            if got != kt {
                return Some(format!(
                    "lambda={l} mu={m} shift {s}, transposed: {got} vs {kt}"
                ));
            }
        }
        None
    }));

    out.push(Check::run(
        "content permutation invariance",
        &mixed,
        |(l, nu)| {
            let a = kostka_number(l, nu).unwrap();
            let b = kostka_number(l, &nu.sorted()).unwrap();
            (a != b).then(|| format!("lambda={l} nu={nu}: {a} vs {b}"))
        },
    ));
    out
}
