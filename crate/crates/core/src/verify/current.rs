//! Relations C1–C5 of the current algebra and the properties of its action.

use crate::combinat::{add_root, enumerate_compositions, Composition, Sign};
use crate::current::{
    apply, apply_e, apply_e_pushpull, apply_f, apply_f_pushpull, apply_word, commutator,
    h_multiplier, node_sign, GeneratorSymbol as G, WeightVector,
};
use crate::poly::MPoly;
use crate::sympoly::{gen, graded_basis, multi_block, Kind};
use crate::theta::{bubble_image, degree::cartan, pi_image, Orientation};

use super::{Check, Grid};

struct Case {
    nu: Composition,
    p: MPoly,
    r: u32,
}

impl Case {
    fn v(&self) -> WeightVector {
        WeightVector::new(self.nu.clone(), self.p.clone())
    }

    fn tag(&self) -> String {
        format!("nu={} p={}", self.nu, self.p)
    }
}

fn cases(grid: Grid) -> Vec<Case> {
    let mut out = Vec::new();
    for nu in enumerate_compositions(grid.n, grid.total) {
        for r in 0..=grid.cutoff {
            for b in graded_basis(&nu, r) {
                out.push(Case {
                    nu: nu.clone(),
                    p: b.poly,
                    r,
                });
            }
        }
    }
    out
}

fn differ(a: &WeightVector, b: &WeightVector) -> bool {
    !a.same(b)
}

fn show(v: &WeightVector) -> String {
    match &v.nu {
        Some(nu) if !v.p.is_zero() => format!("{} @ {}", v.p, nu),
        _ => "0".into(),
    }
}

pub fn current_suite(grid: Grid) -> Vec<Check> {
    let cs = cases(grid);
    let idx: Vec<usize> = (1..grid.n).collect();
    let jm = grid.jmax;
    let mut out = Vec::new();

    out.push(Check::run("C1 [H,H]=0", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            for &j in &idx {
                for r in 0..=jm {
                    for s in 0..=jm {
                        let got = commutator(G::h(i, r), G::h(j, s), &v);
                        if !got.is_zero() {
                            return Some(format!(
                                "{} [H_{{{i},{r}}},H_{{{j},{s}}}] = {}",
                                c.tag(),
                                show(&got)
                            ));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("C2 [H,E]=aE, [H,F]=-aF", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            for &j in &idx {
                let a = cartan(i, j);
                for r in 0..=jm {
                    for s in 0..=jm - r {
                        let lhs = commutator(G::h(i, r), G::e(j, s), &v);
                        let rhs = apply(G::e(j, r + s), &v).scale(a);
                        if differ(&lhs, &rhs) {
                            return Some(format!(
                                "{} [H_{{{i},{r}}},E_{{{j},{s}}}]: {} vs {}",
                                c.tag(),
                                show(&lhs),
                                show(&rhs)
                            ));
                        }
                        let lhs = commutator(G::h(i, r), G::f(j, s), &v);
                        let rhs = apply(G::f(j, r + s), &v).scale(-a);
                        if differ(&lhs, &rhs) {
                            return Some(format!(
                                "{} [H_{{{i},{r}}},F_{{{j},{s}}}]: {} vs {}",
                                c.tag(),
                                show(&lhs),
                                show(&rhs)
                            ));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run(
        "C3 [X_{i,r+1},X_{j,s}]=[X_{i,r},X_{j,s+1}]",
        &cs,
        |c| {
            let v = c.v();
            for &i in &idx {
                for &j in &idx {
                    for r in 0..jm {
                        for s in 0..jm {
                            for (name, mk) in [("E", G::e as fn(usize, u32) -> G), ("F", G::f)] {
                                let lhs = commutator(mk(i, r + 1), mk(j, s), &v);
                                let rhs = commutator(mk(i, r), mk(j, s + 1), &v);
                                if differ(&lhs, &rhs) {
                                    return Some(format!(
                                        "{} {name} i={i} j={j} r={r} s={s}: {} vs {}",
                                        c.tag(),
                                        show(&lhs),
                                        show(&rhs)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            None
        },
    ));

    out.push(Check::run("C4 [E,F]=delta H", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            for &j in &idx {
                for r in 0..=jm {
                    for s in 0..=jm - r {
                        let lhs = commutator(G::e(i, r), G::f(j, s), &v);
                        let rhs = if i == j {
                            apply(G::h(i, r + s), &v)
                        } else {
                            WeightVector::empty()
                        };
                        if differ(&lhs, &rhs) {
                            return Some(format!(
                                "{} [E_{{{i},{r}}},F_{{{j},{s}}}]: {} vs {}",
                                c.tag(),
                                show(&lhs),
                                show(&rhs)
                            ));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("C5 Serre (m=2)", &cs, |c| {
        let v = c.v();
        let top = jm.min(1);
        for &i in &idx {
            for &j in &idx {
                if cartan(i, j) != -1 {
                    continue;
                }
                for k1 in 0..=top {
                    for k2 in 0..=top {
                        for s in 0..=top {
                            for (name, mk) in [("E", G::e as fn(usize, u32) -> G), ("F", G::f)] {
                                let mut acc = WeightVector::empty();
                                for ks in [[k1, k2], [k2, k1]] {
                                    for (l, coef) in [(0usize, 1i64), (1, -2), (2, 1)] {
                                        let mut word: Vec<G> =
                                            ks[..l].iter().map(|&k| mk(i, k)).collect();
                                        word.push(mk(j, s));
                                        word.extend(ks[l..].iter().map(|&k| mk(i, k)));
                                        acc = acc.add(&apply_word(&word, &v).scale(coef));
                                    }
                                }
                                if !acc.is_zero() {
                                    return Some(format!(
                                        "{} {name} i={i} j={j} k=({k1},{k2}) s={s}: {}",
                                        c.tag(),
                                        show(&acc)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("weight grading", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            for j in 0..=jm {
                for (g, sign) in [
                    (G::e(i, j), Some(Sign::Plus)),
                    (G::f(i, j), Some(Sign::Minus)),
                    (G::h(i, j), None),
                ] {
                    let got = apply(g, &v);
                    if got.is_zero() {
                        continue;
                    }
                    let want = match sign {
                        Some(s) => add_root(&c.nu, i, s).unwrap(),
                        None => Some(c.nu.clone()),
                    };
                    if got.nu != want {
                        return Some(format!("{} {g} lands in {:?}", c.tag(), got.nu));
                    }
                }
            }
            let h0 = apply(G::h(i, 0), &v);
            let want = v.scale(c.nu.part(i) as i64 - c.nu.part(i + 1) as i64);
            if differ(&h0, &want) {
                return Some(format!("{} H_{{{i},0}} is not the scalar", c.tag()));
            }
        }
        None
    }));

    out.push(Check::run("degree shifts", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            let w = c.nu.part(i) as i64 - c.nu.part(i + 1) as i64;
            for j in 0..=jm {
                for (g, shift) in [
                    (G::f(i, j), j as i64 + w - 1),
                    (G::e(i, j), j as i64 - w - 1),
                ] {
                    let got = apply(g, &v);
                    if got.is_zero() {
                        continue;
                    }
                    let want = c.r as i64 + shift;
                    if got.p.half_degree().map(i64::from) != Some(want) {
                        return Some(format!(
                            "{} {g}: degree {:?}, expected {want}",
                            c.tag(),
                            got.p.half_degree()
                        ));
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("base-ring linearity", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            // elements of P_ν that also lie in P_{ν±α_i}
            let mut qs = vec![multi_block(Kind::E, 1, &c.nu, &[i, i + 1]).unwrap().poly];
            for b in (1..=grid.n).filter(|&b| b != i && b != i + 1) {
                qs.push(gen(Kind::E, 1, &c.nu, b));
            }
            for q in qs.into_iter().filter(|q| !q.is_zero()) {
                let qv = WeightVector::new(c.nu.clone(), &q * &c.p);
                for j in 0..=jm {
                    for g in [G::e(i, j), G::f(i, j)] {
                        let lhs = apply(g, &qv);
                        let img = apply(g, &v);
                        let rhs = if img.is_zero() {
                            img
                        } else {
                            WeightVector::new(img.nu.clone().unwrap(), &q * &img.p)
                        };
                        if differ(&lhs, &rhs) {
                            return Some(format!("{} {g} with q={q}", c.tag()));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("push-pull agreement", &cs, |c| {
        let v = c.v();
        for &i in &idx {
            for j in 0..=jm {
                if differ(&apply_e(i, j, &v), &apply_e_pushpull(i, j, &v)) {
                    return Some(format!("{} E_{{{i},{j}}}", c.tag()));
                }
                if differ(&apply_f(i, j, &v), &apply_f_pushpull(i, j, &v)) {
                    return Some(format!("{} F_{{{i},{j}}}", c.tag()));
                }
            }
        }
        None
    }));

    let weights = enumerate_compositions(grid.n, grid.total);
    out.push(Check::run(
        "bubbles and pi from the action",
        &weights,
        |nu| {
            let n = nu.total() as usize;
            let one = WeightVector::new(nu.clone(), MPoly::one(n));
            for &i in &idx {
                let w = nu.part(i) as i64 - nu.part(i + 1) as i64;
                if let Some(tgt) = add_root(nu, i, Sign::Minus).unwrap() {
                    let want = WeightVector::new(
                        tgt.clone(),
                        bubble_image(i, &tgt, w - 1, Orientation::Ccw),
                    )
                    .scale(node_sign(i, nu));
                    if differ(&apply_f(i, 0, &one), &want) {
                        return Some(format!("nu={nu} F_{{{i},0}}(1)"));
                    }
                }
                if let Some(tgt) = add_root(nu, i, Sign::Plus).unwrap() {
                    let want = WeightVector::new(
                        tgt.clone(),
                        bubble_image(i, &tgt, -w - 1, Orientation::Cw),
                    )
                    .scale(node_sign(i, nu));
                    if differ(&apply_e(i, 0, &one), &want) {
                        return Some(format!("nu={nu} E_{{{i},0}}(1)"));
                    }
                }
                for j in 0..=jm.max(1) {
                    if pi_image(i, j, nu) != h_multiplier(i, j, nu) {
                        return Some(format!("nu={nu} H_{{{i},{j}}} vs pi"));
                    }
                }
            }
            None
        },
    ));
    out
}
