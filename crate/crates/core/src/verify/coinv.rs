//! Coinvariant quotients: both dimension routes, the symmetric-function
//! case, vanishing, top degree, stability and descent.

use crate::coinv::{
    check_descent, coinv_graded_dim_formula, coinv_graded_dim_linear, ideal_generators, Generators,
    GradedIdeal,
};
use crate::combinat::{
    degree_gap, dominance_leq, enumerate_compositions, enumerate_partitions, Composition, Partition,
};
use crate::poly::MPoly;
use crate::sympoly::{sym_range, Kind};
use crate::tpoly::TPoly;

use super::{Check, Grid};

const SYM_DEGREE: u32 = 6;

fn pairs(grid: Grid) -> Vec<(Partition, Composition)> {
    let weights = enumerate_compositions(grid.n, grid.total);
    enumerate_partitions(grid.n, grid.total)
        .into_iter()
        .flat_map(|l| weights.iter().map(move |nu| (l.clone(), nu.clone())))
        .collect()
}

pub fn coinv_suite(grid: Grid) -> Vec<Check> {
    let ps = pairs(grid);
    let mut out = Vec::new();
    let lin: Vec<TPoly> =
        crate::par::par_map(&ps, |(l, nu)| coinv_graded_dim_linear(l, nu).unwrap());
    let cases: Vec<(usize, &(Partition, Composition))> = ps.iter().enumerate().collect();

    out.push(Check::run("linear = formula", &cases, |&(k, (l, nu))| {
        let f = coinv_graded_dim_formula(l, nu).unwrap();
        (f != lin[k]).then(|| format!("lambda={l} nu={nu}: linear {} formula {f}", lin[k]))
    }));

    out.push(Check::run(
        "nonzero iff lambda dominates sorted nu",
        &cases,
        |&(k, (l, nu))| {
            let dom = dominance_leq(&nu.sorted(), l).unwrap();
            (dom == lin[k].is_zero()).then(|| format!("lambda={l} nu={nu}: {}", lin[k]))
        },
    ));

    out.push(Check::run("top degree d/2", &cases, |&(k, (l, nu))| {
        if lin[k].is_zero() {
            return None;
        }
        let half = (degree_gap(l, nu).unwrap() / 2) as i32;
        (lin[k].max_exp() != Some(half))
            .then(|| format!("lambda={l} nu={nu}: {} (d/2={half})", lin[k]))
    }));

    let parts = enumerate_partitions(grid.n, grid.total);
    out.push(Check::run("diagonal is one-dimensional", &parts, |l| {
        let got = coinv_graded_dim_linear(l, l).unwrap();
        (got != TPoly::one()).then(|| format!("lambda={l}: {got}"))
    }));

    out.push(Check::run("stability under shifts", &ps, |(l, nu)| {
        let a = coinv_graded_dim_formula(l, nu).unwrap();
        let (ls, ns) = (l.shifted(1), nu.shifted(1));
        let b = coinv_graded_dim_formula(&ls, &ns).unwrap();
        let c = coinv_graded_dim_linear(&ls, &ns).unwrap();
        (a != b || a != c).then(|| format!("lambda={l} nu={nu}: {a} vs {b} / {c}"))
    }));

    let weights = enumerate_compositions(grid.n, grid.total);
    out.push(Check::run(
        "lambda_0 ideal is generated by Sym_N",
        &weights,
        |nu| {
            let mut l0 = vec![0; grid.n];
            l0[0] = grid.total;
            let l0 = Partition::new(l0).unwrap();
            let nv = nu.total() as usize;
            let a: Vec<MPoly> = ideal_generators(&l0, nu, SYM_DEGREE)
                .unwrap()
                .into_iter()
                .map(|g| g.poly)
                .collect();
            let b: Vec<MPoly> = (1..=SYM_DEGREE as i64)
                .map(|r| sym_range(Kind::H, r, 0..nv, nv))
                .collect();
            let mut ia = GradedIdeal::new(nu, Generators::Polys(a.clone()));
            let mut ib = GradedIdeal::new(nu, Generators::Polys(b.clone()));
            let mut iab = GradedIdeal::new(nu, Generators::Polys([a, b].concat()));
            for r in 0..=SYM_DEGREE {
                let (x, y, z) = (ia.rank(r), ib.rank(r), iab.rank(r));
                if x != z || y != z {
                    return Some(format!("nu={nu} degree {r}: ranks {x}, {y}, joint {z}"));
                }
            }
            None
        },
    ));

    out.push(Check::run("descent of the current action", &parts, |l| {
        let rep = check_descent(l, grid.n, grid.total, grid.jmax, grid.cutoff).unwrap();
        rep.failures.first().map(|w| format!("lambda={l} {w:?}"))
    }));
    out
}
