//! Relations of the 2-category under the polynomial 2-representation.

use crate::combinat::{enumerate_compositions, Composition};
use crate::current::{h_multiplier, h_multiplier_alt};
use crate::poly::MPoly;
use crate::theta::{
    basis_tensor, bubble_image, cap, cross, cup, degree, dot, map_degree, pi_image, t_scalar,
    Chain, Dir, Elem, Orientation, Strand, Via,
};

use super::{Check, Grid};

/// Largest exponent per strand on basis tensors.
const EXP: u32 = 3;
const GRASSMANNIAN: i64 = 5;
const PI_DEGREE: u32 = 5;
const DOTSLIDE: u32 = 4;

fn exps2() -> impl Iterator<Item = [u32; 2]> {
    (0..=EXP).flat_map(|a| (0..=EXP).map(move |b| [a, b]))
}

fn strand(dir: Dir, i: usize) -> Strand {
    Strand { dir, i }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect()
}

fn diff(a: &Elem, b: &Elem) -> Option<String> {
    (a != b).then(|| format!("got {a:?}, expected {b:?}"))
}

fn twice(v: &Elem) -> Option<Elem> {
    cross(&cross(v, 0)?, 0)
}

pub fn theta_suite(grid: Grid) -> Vec<Check> {
    let weights = enumerate_compositions(grid.n, grid.total);
    let n = grid.n;
    let idx: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();

    out.push(Check::run("Grassmannian relation", &weights, |nu| {
        let nv = nu.total() as usize;
        for &i in &idx {
            for r in 0..=GRASSMANNIAN {
                let mut acc = MPoly::zero(nv);
                for a in 0..=r {
                    acc += &(&bubble_image(i, nu, a, Orientation::Cw)
                        * &bubble_image(i, nu, r - a, Orientation::Ccw));
                }
                let want = if r == 0 {
                    MPoly::one(nv)
                } else {
                    MPoly::zero(nv)
                };
                if acc != want {
                    return Some(format!("nu={nu} i={i} r={r}: {acc}"));
                }
            }
        }
        None
    }));

    out.push(Check::run("pi identity", &weights, |nu| {
        for &i in &idx {
            for j in 0..=PI_DEGREE {
                let (got, want) = (pi_image(i, j, nu), h_multiplier(i, j, nu));
                if got != want {
                    return Some(format!("nu={nu} i={i} j={j}: {got} vs {want}"));
                }
            }
        }
        None
    }));

    out.push(
        Check::run("pi identity, alternating-sign form", &weights, |nu| {
            for &i in &idx {
                for j in 0..=PI_DEGREE {
                    let (got, want) = (pi_image(i, j, nu), h_multiplier_alt(i, j, nu));
                    if got != want {
                        return Some(format!("nu={nu} i={i} j={j}: {got} vs {want}"));
                    }
                }
            }
            None
        })
        .advisory(),
    );

    out.push(Check::run("snake identities", &weights, |nu| {
        for &i in &idx {
            for dir in [Dir::E, Dir::F] {
                let Some(chain) = Chain::new(nu, &[strand(dir, i)]) else {
                    continue;
                };
                // cup on the right closed against the original strand, and
                // cup on the left closed the same way
                let (right_via, left_via) = match dir {
                    Dir::E => (Via::Plus, Via::Minus),
                    Dir::F => (Via::Minus, Via::Plus),
                };
                for r in 0..=EXP {
                    let v = basis_tensor(&chain, &[r]);
                    if let Some(w) = cup(&v, 0, i, right_via) {
                        let got = cap(&w, 1);
                        if let Some(d) = diff(&got, &v) {
                            return Some(format!("nu={nu} {dir:?}{i} right zigzag r={r}: {d}"));
                        }
                    }
                    if let Some(w) = cup(&v, 1, i, left_via) {
                        let got = cap(&w, 0);
                        if let Some(d) = diff(&got, &v) {
                            return Some(format!("nu={nu} {dir:?}{i} left zigzag r={r}: {d}"));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("nilHecke psi^2 = 0", &weights, |nu| {
        for &i in &idx {
            for dir in [Dir::E, Dir::F] {
                let Some(chain) = Chain::new(nu, &[strand(dir, i), strand(dir, i)]) else {
                    continue;
                };
                for e in exps2() {
                    let v = basis_tensor(&chain, &e);
                    if let Some(w) = twice(&v) {
                        if !w.is_zero() {
                            return Some(format!("nu={nu} {dir:?}{i} exps={e:?}: {w:?}"));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("nilHecke dot slides", &weights, |nu| {
        for &i in &idx {
            for dir in [Dir::E, Dir::F] {
                let Some(chain) = Chain::new(nu, &[strand(dir, i), strand(dir, i)]) else {
                    continue;
                };
                // downward strands are the rotation of upward ones, which
                // flips the sign of the identity term
                let k = if dir == Dir::E { 1 } else { -1 };
                for e in exps2() {
                    let v = basis_tensor(&chain, &e);
                    let Some(pv) = cross(&v, 0) else { continue };
                    // ψ x_L - x_R ψ and x_L ψ - ψ x_R
                    let a = cross(&dot(&v, 1, 1), 0).unwrap().sub(&dot(&pv, 0, 1));
                    let b = dot(&pv, 1, 1).sub(&cross(&dot(&v, 0, 1), 0).unwrap());
                    for (name, got) in [("psi x_L - x_R psi", a), ("x_L psi - psi x_R", b)] {
                        if let Some(d) = diff(&got, &v.scale(k)) {
                            return Some(format!("nu={nu} {dir:?}{i} exps={e:?} {name}: {d}"));
                        }
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("double crossing with dots", &weights, |nu| {
        for &i in &idx {
            let Some(chain) = Chain::new(nu, &[Strand::e(i), Strand::e(i)]) else {
                continue;
            };
            for kl in 1..=DOTSLIDE {
                for k in 0..=kl {
                    let l = kl - k;
                    for e in exps2() {
                        let v = basis_tensor(&chain, &e);
                        let Some(pv) = cross(&v, 0) else { continue };
                        let lhs = cross(&dot(&dot(&pv, 1, k), 0, l), 0).unwrap();
                        // Σ_{s<k} x_L^{k+l-1-s} x_R^s - Σ_{s<l} x_L^{k+l-1-s} x_R^s
                        let sym = |w: &Elem| {
                            let mut acc = Elem::zero(&w.chain);
                            for s in 0..k {
                                acc.add_assign(&dot(&dot(w, 1, k + l - 1 - s), 0, s));
                            }
                            for s in 0..l {
                                acc = acc.sub(&dot(&dot(w, 1, k + l - 1 - s), 0, s));
                            }
                            acc
                        };
                        let above = sym(&pv);
                        if let Some(d) = diff(&lhs, &above) {
                            return Some(format!(
                                "nu={nu} i={i} k={k} l={l} exps={e:?} dots above: {d}"
                            ));
                        }
                        let below = cross(&sym(&v), 0).unwrap();
                        if let Some(d) = diff(&lhs, &below) {
                            return Some(format!(
                                "nu={nu} i={i} k={k} l={l} exps={e:?} dots below: {d}"
                            ));
                        }
                    }
                }
            }
        }
        None
    }));

    let ij = pairs(n);
    out.push(Check::run("square relations, i != j", &weights, |nu| {
        for &(i, j) in &ij {
            let a = degree::cartan(i, j);
            if a == 2 {
                continue;
            }
            for dir in [Dir::E, Dir::F] {
                // left strand i, right strand j
                let Some(chain) = Chain::new(nu, &[strand(dir, j), strand(dir, i)]) else {
                    continue;
                };
                for e in exps2() {
                    let v = basis_tensor(&chain, &e);
                    let Some(got) = twice(&v) else { continue };
                    let want = match a {
                        0 => v.clone(),
                        _ => {
                            let mut w = dot(&v, 1, 1).scale(t_scalar(i, j));
                            w.add_assign(&dot(&v, 0, 1).scale(t_scalar(j, i)));
                            w
                        }
                    };
                    if let Some(d) = diff(&got, &want) {
                        return Some(format!("nu={nu} {dir:?} i={i} j={j} exps={e:?}: {d}"));
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("dot slides, i != j", &weights, |nu| {
        for &(i, j) in &ij {
            if i == j {
                continue;
            }
            for dir in [Dir::E, Dir::F] {
                let Some(chain) = Chain::new(nu, &[strand(dir, j), strand(dir, i)]) else {
                    continue;
                };
                for e in exps2() {
                    let v = basis_tensor(&chain, &e);
                    let Some(pv) = cross(&v, 0) else { continue };
                    let a = dot(&pv, 0, 1);
                    let b = cross(&dot(&v, 1, 1), 0).unwrap();
                    if let Some(d) = diff(&a, &b) {
                        return Some(format!(
                            "nu={nu} {dir:?} i={i} j={j} exps={e:?} left-to-right: {d}"
                        ));
                    }
                    let a = dot(&pv, 1, 1);
                    let b = cross(&dot(&v, 0, 1), 0).unwrap();
                    if let Some(d) = diff(&a, &b) {
                        return Some(format!(
                            "nu={nu} {dir:?} i={i} j={j} exps={e:?} right-to-left: {d}"
                        ));
                    }
                }
            }
        }
        None
    }));

    out.push(Check::run("degree audit", &weights, |nu| {
        degree_audit(nu, n)
    }));
    out
}

fn half(e: &Elem) -> Option<i64> {
    e.half_degree().map(i64::from)
}

fn audit(what: &str, nu: &Composition, input: &Elem, output: &Elem, want: i64) -> Option<String> {
    if output.is_zero() {
        return None;
    }
    let (Some(a), Some(b)) = (half(input), half(output)) else {
        return Some(format!("nu={nu} {what}: inhomogeneous"));
    };
    let got = map_degree(b - a, &input.chain, &output.chain);
    (got != want).then(|| format!("nu={nu} {what}: degree {got}, declared {want}"))
}

fn degree_audit(nu: &Composition, n: usize) -> Option<String> {
    let w = |nu: &Composition, i: usize| nu.part(i) as i64 - nu.part(i + 1) as i64;
    for i in 1..n {
        for dir in [Dir::E, Dir::F] {
            if let Some(chain) = Chain::new(nu, &[strand(dir, i)]) {
                for r in 0..=EXP {
                    let v = basis_tensor(&chain, &[r]);
                    for s in 0..=2 {
                        let got = dot(&v, 0, s);
                        if let Some(x) = audit(
                            &format!("{s} dots on {dir:?}{i}"),
                            nu,
                            &v,
                            &got,
                            s as i64 * degree::dot(),
                        ) {
                            return Some(x);
                        }
                    }
                }
            }
            for j in 1..n {
                let Some(chain) = Chain::new(nu, &[strand(dir, j), strand(dir, i)]) else {
                    continue;
                };
                for e in exps2() {
                    let v = basis_tensor(&chain, &e);
                    if let Some(got) = cross(&v, 0) {
                        if let Some(x) = audit(
                            &format!("crossing {dir:?} i={i} j={j}"),
                            nu,
                            &v,
                            &got,
                            degree::crossing(i, j),
                        ) {
                            return Some(x);
                        }
                    }
                }
            }
        }
        let empty = Chain::new(nu, &[]).unwrap();
        let one = Elem::one(&empty);
        for via in [Via::Minus, Via::Plus] {
            if let Some(c) = cup(&one, 0, i, via) {
                if let Some(x) = audit(
                    &format!("cup {via:?} i={i}"),
                    nu,
                    &one,
                    &c,
                    degree::cup(via, w(nu, i)),
                ) {
                    return Some(x);
                }
            }
            let Some(chain) = Chain::new(nu, &via.strands(i)) else {
                continue;
            };
            for e in exps2() {
                let v = basis_tensor(&chain, &e);
                let got = cap(&v, 0);
                if let Some(x) = audit(
                    &format!("cap {via:?} i={i} exps={e:?}"),
                    nu,
                    &v,
                    &got,
                    degree::cap(via, w(nu, i)),
                ) {
                    return Some(x);
                }
            }
        }
    }
    None
}
