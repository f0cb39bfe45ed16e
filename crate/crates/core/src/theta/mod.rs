//! Images of the generating 2-morphisms as bimodule maps, plus bubbles.

mod chain;

pub use chain::{Chain, Dir, Elem, Factor, Strand};

use num_bigint::BigInt;

use crate::combinat::Composition;
use crate::poly::MPoly;
use crate::sympoly::{gen, gysin, locate, Kind};

/// Which intermediate weight a cup or cap passes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Via {
    /// through `ν - α_i`: the composite `E_i F_i 1_ν`
    Minus,
    /// through `ν + α_i`: the composite `F_i E_i 1_ν`
    Plus,
}

impl Via {
    /// Strands inserted by the cup, first-applied first.
    pub fn strands(self, i: usize) -> [Strand; 2] {
        match self {
            Via::Minus => [Strand::f(i), Strand::e(i)],
            Via::Plus => [Strand::e(i), Strand::f(i)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Cw,
    Ccw,
}

fn pow(n: usize, x: usize, e: u32) -> MPoly {
    MPoly::var_pow(n, x, e)
}

/// Multiply strand `pos` by `s` dots.
pub fn dot(elem: &Elem, pos: usize, s: u32) -> Elem {
    let f = &elem.chain.factors[pos];
    elem.mul_factor(pos, &pow(elem.chain.nvars(), f.x, s))
}

/// The cup's image of 1 as a list of `(left, right)` pure tensors.
fn casimir(nu: &Composition, i: usize, via: Via) -> Vec<(MPoly, MPoly)> {
    let n = nu.total() as usize;
    let (x, d, block) = match via {
        Via::Minus => (nu.k(i) - 1, nu.part(i + 1), i + 1),
        Via::Plus => (nu.k(i), nu.part(i), i),
    };
    (0..=d)
        .map(|r| {
            let e = gen(Kind::E, (d - r) as i64, nu, block);
            let e = if (d - r) % 2 == 1 { -e } else { e };
            (pow(n, x, r), e)
        })
        .collect()
}

/// Insert a cup at weight position `pos` (0 = right end). `None` if the
/// intermediate weight is empty.
pub fn cup(elem: &Elem, pos: usize, i: usize, via: Via) -> Option<Elem> {
    let chain = &elem.chain;
    let nu = &chain.weights[pos];
    let mut strands = chain.strands();
    let [a, b] = via.strands(i);
    strands.splice(pos..pos, [a, b]);
    let target = Chain::new(chain.source(), &strands)?;
    let cas = casimir(nu, i, via);
    let mut out = Elem::zero(&target);
    for (c, fs) in elem.pure_terms() {
        for (left, right) in &cas {
            let mut gs = fs.clone();
            gs.splice(pos..pos, [right.clone(), left.clone()]);
            out.add_assign(&Elem::from_pure(&target, &c, &gs));
        }
    }
    Some(out)
}

/// Contract strands `pos` and `pos + 1`, which must form a cap.
pub fn cap(elem: &Elem, pos: usize) -> Elem {
    let chain = &elem.chain;
    let (fr, fl) = (&chain.factors[pos], &chain.factors[pos + 1]);
    assert!(
        fr.strand.i == fl.strand.i && fr.strand.dir != fl.strand.dir,
        "strands {} and {} do not form a cap",
        fr.strand,
        fl.strand
    );
    debug_assert_eq!(fr.x, fl.x);
    let nu = &chain.weights[pos];
    let (_, range, position) = locate(nu, fr.x).expect("cap variable inside the outer ring");
    let mut strands = chain.strands();
    strands.drain(pos..pos + 2);
    let target =
        Chain::new(chain.source(), &strands).expect("removing a cap keeps the chain valid");
    let mut out = Elem::zero(&target);
    for (c, mut fs) in elem.pure_terms() {
        let q = gysin(&(&fs[pos] * &fs[pos + 1]), range.clone(), position);
        if q.is_zero() {
            continue;
        }
        fs.drain(pos..pos + 2);
        if fs.is_empty() {
            out.add_assign(&Elem::scalar(&target, &c * &q));
            continue;
        }
        let slot = if pos > 0 { pos - 1 } else { 0 };
        fs[slot] = &fs[slot] * &q;
        out.add_assign(&Elem::from_pure(&target, &c, &fs));
    }
    out
}

/// The scalar `t_{ij}`: `-1` when `j = i + 1`, otherwise `1`. The bimodule
/// maps are only well defined when `t_{ij} = -t_{ji}` on adjacent nodes.
pub fn t_scalar(i: usize, j: usize) -> i64 {
    if j == i + 1 {
        -1
    } else {
        1
    }
}

/// The crossing's image on `x_L^{r1} ⊗ x_R^{r2}` (left strand `i`, right
/// strand `j`, both oriented `dir`), as `(coef, new_left, new_right)`
/// exponent triples on the separated variables of the swapped factors.
pub fn crossing_terms(dir: Dir, i: usize, j: usize, r1: u32, r2: u32) -> Vec<(i64, u32, u32)> {
    let mut out = Vec::new();
    let adjacent_up = i == j + 1;
    let adjacent_down = j == i + 1;
    match dir {
        _ if i == j => {
            let (plus, minus) = match dir {
                Dir::E => (r1, r2),
                Dir::F => (r2, r1),
            };
            for f in 0..plus {
                out.push((1, r1 + r2 - 1 - f, f));
            }
            for g in 0..minus {
                out.push((-1, r1 + r2 - 1 - g, g));
            }
        }
        Dir::E if adjacent_up => {
            out.push((t_scalar(i, j), r2, r1 + 1));
            out.push((t_scalar(j, i), r2 + 1, r1));
        }
        Dir::F if adjacent_down => {
            out.push((t_scalar(j, i), r2 + 1, r1));
            out.push((t_scalar(i, j), r2, r1 + 1));
        }
        _ => out.push((1, r2, r1)),
    }
    out
}

/// Apply the crossing to strands `pos` (right) and `pos + 1` (left), which
/// must have the same orientation. `None` if the swapped word passes through
/// an empty weight.
pub fn cross(elem: &Elem, pos: usize) -> Option<Elem> {
    let chain = &elem.chain;
    let (fr, fl) = (&chain.factors[pos], &chain.factors[pos + 1]);
    assert_eq!(
        fr.strand.dir, fl.strand.dir,
        "sideways crossings are composites"
    );
    let dir = fr.strand.dir;
    let (i, j) = (fl.strand.i, fr.strand.i);
    let mut strands = chain.strands();
    strands.swap(pos, pos + 1);
    let target = Chain::new(chain.source(), &strands)?;
    let (xl, xr) = (target.factors[pos + 1].x, target.factors[pos].x);
    let n = chain.nvars();
    let mut out = Elem::zero(&target);
    for (c, fs) in elem.pure_terms() {
        let r1 = exponent_of(&fs[pos + 1], fl.x);
        let r2 = exponent_of(&fs[pos], fr.x);
        for (k, a, b) in crossing_terms(dir, i, j, r1, r2) {
            let mut gs = fs.clone();
            gs[pos + 1] = pow(n, xl, a);
            gs[pos] = pow(n, xr, b);
            let piece = Elem::from_pure(&target, &c, &gs);
            out.add_assign(&piece.scale(k));
        }
    }
    Some(out)
}

fn exponent_of(p: &MPoly, x: usize) -> u32 {
    let (m, _) = p.terms().next().expect("pure power");
    m.exp(x)
}

/// Pure tensor `x^{r_{L-1}} ⊗ ... ⊗ x^{r_0}` on a chain.
pub fn basis_tensor(chain: &Chain, exps: &[u32]) -> Elem {
    let n = chain.nvars();
    let fs: Vec<MPoly> = chain
        .factors
        .iter()
        .zip(exps)
        .map(|(f, &e)| pow(n, f.x, e))
        .collect();
    Elem::from_pure(chain, &MPoly::one(n), &fs)
}

// Named images on the smallest chains.

/// Dot on a single strand: `x^r ↦ x^{r+s}`.
pub fn dot_image(i: usize, nu: &Composition, s: u32, dir: Dir, r: u32) -> Option<Elem> {
    let chain = Chain::new(nu, &[Strand { dir, i }])?;
    Some(dot(&basis_tensor(&chain, &[r]), 0, s))
}

/// Cup through `ν - α_i`.
pub fn cup_fe_image(i: usize, nu: &Composition) -> Option<Elem> {
    cup(&Elem::one(&Chain::new(nu, &[])?), 0, i, Via::Minus)
}

/// Cup through `ν + α_i`.
pub fn cup_ef_image(i: usize, nu: &Composition) -> Option<Elem> {
    cup(&Elem::one(&Chain::new(nu, &[])?), 0, i, Via::Plus)
}

/// Cap through `ν - α_i` on `x^{r1} ⊗ x^{r2}`.
pub fn cap_fe_image(i: usize, nu: &Composition, r1: u32, r2: u32) -> Option<MPoly> {
    let chain = Chain::new(nu, &Via::Minus.strands(i))?;
    Some(cap(&basis_tensor(&chain, &[r2, r1]), 0).as_poly())
}

/// Cap through `ν + α_i` on `x^{r1} ⊗ x^{r2}`.
pub fn cap_ef_image(i: usize, nu: &Composition, r1: u32, r2: u32) -> Option<MPoly> {
    let chain = Chain::new(nu, &Via::Plus.strands(i))?;
    Some(cap(&basis_tensor(&chain, &[r2, r1]), 0).as_poly())
}

/// Upward crossing `E_i E_j 1_ν -> E_j E_i 1_ν` on `x^{r1} ⊗ x^{r2}`.
pub fn crossing_up_image(i: usize, j: usize, nu: &Composition, r1: u32, r2: u32) -> Option<Elem> {
    let chain = Chain::new(nu, &[Strand::e(j), Strand::e(i)])?;
    cross(&basis_tensor(&chain, &[r2, r1]), 0)
}

/// Downward crossing `F_i F_j 1_ν -> F_j F_i 1_ν` on `x^{r1} ⊗ x^{r2}`.
pub fn crossing_down_image(i: usize, j: usize, nu: &Composition, r1: u32, r2: u32) -> Option<Elem> {
    let chain = Chain::new(nu, &[Strand::f(j), Strand::f(i)])?;
    cross(&basis_tensor(&chain, &[r2, r1]), 0)
}

/// Bubble of degree `2r` in the ♠+r convention; zero for `r < 0`.
pub fn bubble_image(i: usize, nu: &Composition, r: i64, orientation: Orientation) -> MPoly {
    let n = nu.total() as usize;
    let (eb, hb) = match orientation {
        Orientation::Cw => (i + 1, i),
        Orientation::Ccw => (i, i + 1),
    };
    let mut acc = MPoly::zero(n);
    for l in 0..=r.max(-1) {
        let e = gen(Kind::E, l, nu, eb);
        if e.is_zero() {
            continue;
        }
        let t = &e * &gen(Kind::H, r - l, nu, hb);
        if l % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

/// `Σ_{l=0}^{j} (l+1) cw(l) ccw(j-l)` for `j > 0`, and `ν̄_i` for `j = 0`.
pub fn pi_image(i: usize, j: u32, nu: &Composition) -> MPoly {
    let n = nu.total() as usize;
    if j == 0 {
        return MPoly::constant(n, nu.part(i) as i64 - nu.part(i + 1) as i64);
    }
    let mut acc = MPoly::zero(n);
    for l in 0..=j as i64 {
        let t = &bubble_image(i, nu, l, Orientation::Cw)
            * &bubble_image(i, nu, j as i64 - l, Orientation::Ccw);
        acc += &t.scale(&BigInt::from(l + 1));
    }
    acc
}

/// Real bubble with `s` dots, evaluated as cap ∘ dots ∘ cup on `1 ∈ P_ν`.
pub fn real_bubble(i: usize, nu: &Composition, s: u32, via: Via) -> Option<MPoly> {
    let c = match via {
        Via::Minus => cup_fe_image(i, nu)?,
        Via::Plus => cup_ef_image(i, nu)?,
    };
    Some(cap(&dot(&c, 1, s), 0).as_poly())
}

/// Degrees of the generators in the 2-category, in units where a dot has degree 2.
pub mod degree {
    use super::Via;

    pub fn dot() -> i64 {
        2
    }

    pub fn crossing(i: usize, j: usize) -> i64 {
        -cartan(i, j)
    }

    pub fn cup(via: Via, weight_i: i64) -> i64 {
        match via {
            Via::Minus => 1 - weight_i,
            Via::Plus => 1 + weight_i,
        }
    }

    pub fn cap(via: Via, weight_i: i64) -> i64 {
        cup(via, weight_i)
    }

    pub fn cartan(i: usize, j: usize) -> i64 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }
}

/// Degree of a map between chains, given the polynomial degree change:
/// `2·Δ(half-degree) + shift(source) - shift(target)`.
pub fn map_degree(delta_half: i64, source: &Chain, target: &Chain) -> i64 {
    2 * delta_half + source.shift() - target.shift()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[u32]) -> Composition {
        Composition::from(v)
    }

    fn x(n: usize, k: usize) -> MPoly {
        MPoly::var(n, k)
    }

    #[test]
    fn cup_example() {
        // Σ_{r=0}^{1} (-1)^{1-r} X1^r ⊗ e_{1-r}(ν;2) = X1 ⊗ 1 - 1 ⊗ X2
        let nu = c(&[1, 1]);
        let got = cup_fe_image(1, &nu).unwrap();
        let chain = got.chain.clone();
        let one = MPoly::one(2);
        let want = Elem::from_pure(&chain, &one, &[one.clone(), x(2, 0)]).sub(&Elem::from_pure(
            &chain,
            &one,
            &[x(2, 1), one.clone()],
        ));
        assert_eq!(got, want);
        assert!(cup_ef_image(1, &c(&[2, 0])).is_none());
        // ν_{i+1} = 0: 1 ⊗ 1
        let got = cup_fe_image(1, &c(&[2, 0])).unwrap();
        assert_eq!(got, Elem::one(&got.chain));
    }

    #[test]
    fn cap_examples() {
        let nu = c(&[1, 1]);
        assert_eq!(cap_fe_image(1, &nu, 0, 0).unwrap(), MPoly::one(2));
        assert_eq!(cap_fe_image(1, &nu, 0, 1).unwrap(), x(2, 0));
        assert_eq!(cap_ef_image(1, &nu, 0, 0).unwrap(), MPoly::one(2));
    }

    #[test]
    fn crossing_examples() {
        assert!(crossing_up_image(1, 1, &c(&[0, 2]), 0, 0)
            .unwrap()
            .is_zero());
        assert!(crossing_up_image(1, 1, &c(&[2, 1]), 0, 0).is_none());
        let got = crossing_up_image(1, 1, &c(&[0, 2]), 1, 0).unwrap();
        assert_eq!(got, Elem::one(&got.chain));
    }

    #[test]
    fn bubble_examples() {
        let nu = c(&[1, 1]);
        assert_eq!(bubble_image(1, &nu, 0, Orientation::Cw), MPoly::one(2));
        assert_eq!(
            bubble_image(1, &nu, 1, Orientation::Cw),
            &x(2, 0) - &x(2, 1)
        );
        assert!(bubble_image(1, &nu, -1, Orientation::Ccw).is_zero());
        assert_eq!(pi_image(1, 1, &nu), &x(2, 0) - &x(2, 1));
        assert_eq!(pi_image(1, 0, &c(&[3, 1])), MPoly::constant(4, 2));
    }

    #[test]
    fn dot_examples() {
        let nu = c(&[1, 2]);
        let got = dot_image(1, &nu, 2, Dir::F, 0).unwrap();
        assert_eq!(got, basis_tensor(&got.chain, &[2]));
        let got = dot_image(1, &nu, 0, Dir::E, 1).unwrap();
        assert_eq!(got, basis_tensor(&got.chain, &[1]));
    }
}
