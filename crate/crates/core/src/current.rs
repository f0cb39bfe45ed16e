//! The current algebra `U(sl_n[t])` acting on `⊕_ν P_ν`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{add_root, Composition, Sign};
use crate::poly::{MPoly, Monomial};
use crate::sympoly::{free_decompose, gen, gysin, Kind, Position};

/// An element of a single weight space, or of the empty one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub nu: Option<Composition>,
    pub p: MPoly,
}

impl WeightVector {
    pub fn new(nu: Composition, p: MPoly) -> WeightVector {
        WeightVector { nu: Some(nu), p }
    }

    pub fn empty() -> WeightVector {
        WeightVector {
            nu: None,
            p: MPoly::zero(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nu.is_none() || self.p.is_zero()
    }

    /// Equality where any two zero vectors agree regardless of weight.
    pub fn same(&self, other: &WeightVector) -> bool {
        (self.is_zero() && other.is_zero()) || self == other
    }

    fn with(&self, nu: Option<Composition>, p: MPoly) -> WeightVector {
        match nu {
            Some(nu) => WeightVector::new(nu, p),
            None => WeightVector::empty(),
        }
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        self.combine(other, -1)
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        self.combine(other, 1)
    }

    fn combine(&self, other: &WeightVector, sign: i64) -> WeightVector {
        if other.is_zero() {
            return self.clone();
        }
        let o = if sign < 0 { -&other.p } else { other.p.clone() };
        if self.is_zero() {
            return other.with(other.nu.clone(), o);
        }
        assert_eq!(self.nu, other.nu, "adding vectors of different weights");
        self.with(self.nu.clone(), &self.p + &o)
    }

    pub fn scale(&self, k: i64) -> WeightVector {
        self.with(self.nu.clone(), self.p.scale(&BigInt::from(k)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    E,
    F,
    H,
}

/// `E_{i,j}`, `F_{i,j}` or `H_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub i: usize,
    pub j: u32,
}

impl GeneratorSymbol {
    pub fn e(i: usize, j: u32) -> Self {
        GeneratorSymbol {
            kind: GenKind::E,
            i,
            j,
        }
    }
    pub fn f(i: usize, j: u32) -> Self {
        GeneratorSymbol {
            kind: GenKind::F,
            i,
            j,
        }
    }
    pub fn h(i: usize, j: u32) -> Self {
        GeneratorSymbol {
            kind: GenKind::H,
            i,
            j,
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{{{},{}}}", self.kind, self.i, self.j)
    }
}

fn valid_index(nu: &Composition, i: usize) -> bool {
    i >= 1 && i < nu.n()
}

/// Sign carried by `E_i` and `F_i` on `P_ν`: `(-1)^{ν_{i+2} + ... + ν_n}`.
/// Without it generators on adjacent nodes anticommute.
pub fn node_sign(i: usize, nu: &Composition) -> i64 {
    let tail: u32 = (i + 2..=nu.n()).map(|m| nu.part(m)).sum();
    if tail.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed(i: usize, nu: &Composition, p: MPoly) -> MPoly {
    if node_sign(i, nu) < 0 {
        -p
    } else {
        p
    }
}

fn alternating_eh(
    e_nu: &Composition,
    e_block: usize,
    h_block: usize,
    len: i64,
    shift: i64,
) -> MPoly {
    // Σ_{l=0}^{len-1} (-1)^l e_l(e_block) h_{shift-l}(h_block)
    let mut acc = MPoly::zero(e_nu.total() as usize);
    for l in 0..len {
        let t = &gen(Kind::E, l, e_nu, e_block) * &gen(Kind::H, shift - l, e_nu, h_block);
        if l % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

/// `F_{i,j}`: decompose over `P_{ν-α_i}` in powers of `X_{k_i}` and apply
/// the closed formula to each power.
pub fn apply_f(i: usize, j: u32, v: &WeightVector) -> WeightVector {
    let Some(nu) = &v.nu else {
        return WeightVector::empty();
    };
    if !valid_index(nu, i) {
        return WeightVector::empty();
    }
    let Some(tgt) = add_root(nu, i, Sign::Minus).unwrap() else {
        return WeightVector::empty();
    };
    let x = nu.k(i) - 1;
    let (a, b) = (nu.part(i) as i64, nu.part(i + 1) as i64);
    let qs = free_decompose(&v.p, x, &tgt, (b + 1) as usize).expect("P_ν lies in the refined ring");
    let mut out = MPoly::zero(v.p.nvars());
    for (m, q) in qs.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let img = alternating_eh(&tgt, i, i + 1, a, m as i64 + j as i64 + a - b - 1);
        out += &(q * &img);
    }
    WeightVector::new(tgt, signed(i, nu, out))
}

/// `E_{i,j}`: decompose over `P_{ν+α_i}` in powers of `X_{k_i+1}`.
pub fn apply_e(i: usize, j: u32, v: &WeightVector) -> WeightVector {
    let Some(nu) = &v.nu else {
        return WeightVector::empty();
    };
    if !valid_index(nu, i) {
        return WeightVector::empty();
    }
    let Some(tgt) = add_root(nu, i, Sign::Plus).unwrap() else {
        return WeightVector::empty();
    };
    let x = nu.k(i);
    let (a, b) = (nu.part(i) as i64, nu.part(i + 1) as i64);
    let qs = free_decompose(&v.p, x, &tgt, (a + 1) as usize).expect("P_ν lies in the refined ring");
    let mut out = MPoly::zero(v.p.nvars());
    for (m, q) in qs.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let img = alternating_eh(&tgt, i + 1, i, b, m as i64 + j as i64 + b - a - 1);
        out += &(q * &img);
    }
    WeightVector::new(tgt, signed(i, nu, out))
}

/// The multiplier of `H_{i,j}` on `P_ν`: `ν_i - ν_{i+1}` for `j = 0`,
/// otherwise `p_j(ν;i) - p_j(ν;i+1)`.
pub fn h_multiplier(i: usize, j: u32, nu: &Composition) -> MPoly {
    let n = nu.total() as usize;
    if j == 0 {
        return MPoly::constant(n, nu.part(i) as i64 - nu.part(i + 1) as i64);
    }
    &gen(Kind::P, j as i64, nu, i) - &gen(Kind::P, j as i64, nu, i + 1)
}

/// The alternative multiplier `(-1)^j (p_j(ν;i+1) - p_j(ν;i))` for `j > 0`.
/// It agrees with [`h_multiplier`] for odd `j` only.
pub fn h_multiplier_alt(i: usize, j: u32, nu: &Composition) -> MPoly {
    if j == 0 {
        return h_multiplier(i, 0, nu);
    }
    let d = &gen(Kind::P, j as i64, nu, i + 1) - &gen(Kind::P, j as i64, nu, i);
    if j % 2 == 1 {
        -d
    } else {
        d
    }
}

pub fn apply_h(i: usize, j: u32, v: &WeightVector) -> WeightVector {
    let Some(nu) = &v.nu else {
        return WeightVector::empty();
    };
    if !valid_index(nu, i) {
        return WeightVector::empty();
    }
    WeightVector::new(nu.clone(), &v.p * &h_multiplier(i, j, nu))
}

pub fn apply(g: GeneratorSymbol, v: &WeightVector) -> WeightVector {
    match g.kind {
        GenKind::E => apply_e(g.i, g.j, v),
        GenKind::F => apply_f(g.i, g.j, v),
        GenKind::H => apply_h(g.i, g.j, v),
    }
}

/// Rightmost symbol first.
pub fn apply_word(word: &[GeneratorSymbol], v: &WeightVector) -> WeightVector {
    word.iter().rev().fold(v.clone(), |acc, &g| apply(g, &acc))
}

/// `[a, b] v = a(b v) - b(a v)`.
pub fn commutator(a: GeneratorSymbol, b: GeneratorSymbol, v: &WeightVector) -> WeightVector {
    apply_word(&[a, b], v).sub(&apply_word(&[b, a], v))
}

/// Product of `(x - y)` over `y` in `vars`.
fn vandermonde_factor(n: usize, x: usize, vars: impl Iterator<Item = usize>) -> MPoly {
    let mut acc = MPoly::one(n);
    for y in vars {
        acc = &acc * &(&MPoly::var(n, x) - &MPoly::var(n, y));
    }
    acc
}

/// `F_{i,j}` as a pull-push: multiply by `x^j Π(x - y)` over the rest of
/// block `i`, then take the trace into `P_{ν-α_i}`.
pub fn apply_f_pushpull(i: usize, j: u32, v: &WeightVector) -> WeightVector {
    let Some(nu) = &v.nu else {
        return WeightVector::empty();
    };
    if !valid_index(nu, i) {
        return WeightVector::empty();
    }
    let Some(tgt) = add_root(nu, i, Sign::Minus).unwrap() else {
        return WeightVector::empty();
    };
    let n = nu.total() as usize;
    let x = nu.k(i) - 1;
    let w = vandermonde_factor(n, x, nu.block_range(i).filter(|&y| y != x));
    let p = (&v.p * &w).mul_monomial(&Monomial::var(x, j), &BigInt::one());
    WeightVector::new(
        tgt.clone(),
        signed(i, nu, gysin(&p, tgt.block_range(i + 1), Position::First)),
    )
}

/// `E_{i,j}` as a pull-push into `P_{ν+α_i}`.
pub fn apply_e_pushpull(i: usize, j: u32, v: &WeightVector) -> WeightVector {
    let Some(nu) = &v.nu else {
        return WeightVector::empty();
    };
    if !valid_index(nu, i) {
        return WeightVector::empty();
    }
    let Some(tgt) = add_root(nu, i, Sign::Plus).unwrap() else {
        return WeightVector::empty();
    };
    let n = nu.total() as usize;
    let x = nu.k(i);
    let w = vandermonde_factor(n, x, nu.block_range(i + 1).filter(|&y| y != x));
    let p = (&v.p * &w).mul_monomial(&Monomial::var(x, j), &BigInt::one());
    WeightVector::new(
        tgt.clone(),
        signed(i, nu, gysin(&p, tgt.block_range(i), Position::Last)),
    )
}
