//! Block-symmetric polynomial rings `P_ν`, the e/h/p families, graded bases
//! and free-module decomposition over a coarser block ring.

use std::cell::RefCell;
use std::collections::HashMap;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::poly::{MPoly, Monomial, MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    E,
    H,
    P,
}

type SymKey = (Kind, i64, Vec<usize>, usize);

thread_local! {
    static SYM_CACHE: RefCell<HashMap<SymKey, MPoly>> =
        RefCell::new(HashMap::new());
}

fn build_sym(kind: Kind, r: usize, vars: &[usize], nvars: usize) -> MPoly {
    let mut out = MPoly::zero(nvars);
    let one = BigInt::one();
    match kind {
        Kind::P => {
            for &v in vars {
                out.add_term(Monomial::var(v, r as u32), &one);
            }
        }
        Kind::E | Kind::H => {
            // Walk weakly increasing (H) or strictly increasing (E) index sequences.
            fn rec(
                kind: Kind,
                vars: &[usize],
                from: usize,
                left: usize,
                m: &mut Monomial,
                out: &mut MPoly,
            ) {
                if left == 0 {
                    out.add_term(*m, &BigInt::one());
                    return;
                }
                for pos in from..vars.len() {
                    let v = vars[pos];
                    m.set(v, m.exp(v) + 1);
                    let next = if kind == Kind::E { pos + 1 } else { pos };
                    rec(kind, vars, next, left - 1, m, out);
                    m.set(v, m.exp(v) - 1);
                }
            }
            let mut m = Monomial::ONE;
            rec(kind, vars, 0, r, &mut m, &mut out);
        }
    }
    out
}

/// `e_r`, `h_r` or `p_r` in the given variables (0-based indices).
///
/// Negative `r` gives 0 and `r = 0` gives 1 for every kind (including `p_0`,
/// which by this convention is 1 rather than the number of variables).
pub fn sym(kind: Kind, r: i64, vars: &[usize], nvars: usize) -> MPoly {
    if r < 0 {
        return MPoly::zero(nvars);
    }
    if r == 0 {
        return MPoly::one(nvars);
    }
    if kind == Kind::E && r as usize > vars.len() {
        return MPoly::zero(nvars);
    }
    let key = (kind, r, vars.to_vec(), nvars);
    if let Some(p) = SYM_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return p;
    }
    let p = build_sym(kind, r as usize, vars, nvars);
    SYM_CACHE.with(|c| c.borrow_mut().insert(key, p.clone()));
    p
}

pub fn sym_range(kind: Kind, r: i64, vars: Range<usize>, nvars: usize) -> MPoly {
    let v: Vec<usize> = vars.collect();
    sym(kind, r, &v, nvars)
}

/// An element of `P_ν`: a polynomial invariant under permutations inside each block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSymPoly {
    pub poly: MPoly,
    pub blocks: Composition,
}

impl BlockSymPoly {
    pub fn new(poly: MPoly, blocks: Composition) -> Result<BlockSymPoly> {
        check_block_symmetric(&poly, &blocks)?;
        Ok(BlockSymPoly { poly, blocks })
    }

    pub(crate) fn trusted(poly: MPoly, blocks: &Composition) -> BlockSymPoly {
        debug_assert!(check_block_symmetric(&poly, blocks).is_ok());
        BlockSymPoly {
            poly,
            blocks: blocks.clone(),
        }
    }
}

/// Checks invariance under adjacent transpositions within each block.
pub fn check_block_symmetric(p: &MPoly, blocks: &Composition) -> Result<()> {
    let n = blocks.total() as usize;
    if n > MAX_VARS {
        return Err(Error::TooManyVariables(n));
    }
    if p.support_vars() > n {
        return Err(Error::TooManyVariables(p.support_vars()));
    }
    for b in 1..=blocks.n() {
        let range = blocks.block_range(b);
        for a in range.start..range.end.saturating_sub(1) {
            if p.swap_vars(a, a + 1) != *p {
                return Err(Error::Symmetry {
                    block: b,
                    a: a + 1,
                    b: a + 2,
                });
            }
        }
    }
    Ok(())
}

fn check_block(nu: &Composition, block: usize) -> Result<()> {
    if block == 0 || block > nu.n() {
        return Err(Error::IndexOutOfRange {
            index: block,
            max: nu.n(),
        });
    }
    Ok(())
}

/// `e_r(ν; i)`, `h_r(ν; i)`, `p_r(ν; i)`.
pub fn generator(kind: Kind, r: i64, nu: &Composition, block: usize) -> Result<BlockSymPoly> {
    check_block(nu, block)?;
    let n = nu.total() as usize;
    Ok(BlockSymPoly::trusted(
        sym_range(kind, r, nu.block_range(block), n),
        nu,
    ))
}

/// Shorthand for `generator(..).poly` with in-range blocks.
pub fn gen(kind: Kind, r: i64, nu: &Composition, block: usize) -> MPoly {
    sym_range(kind, r, nu.block_range(block), nu.total() as usize)
}

/// `e_r` or `h_r` over the union of several blocks, as a convolution of the
/// per-block families.
pub fn multi_block(kind: Kind, r: i64, nu: &Composition, blocks: &[usize]) -> Result<BlockSymPoly> {
    if kind == Kind::P {
        return Err(Error::Parse {
            pos: 0,
            msg: "multi_block is defined for e and h only".into(),
        });
    }
    for &b in blocks {
        check_block(nu, b)?;
    }
    if blocks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parse {
            pos: 0,
            msg: "block indices must increase".into(),
        });
    }
    let n = nu.total() as usize;
    // conv[s] = family over the blocks processed so far, degree s
    let mut conv = vec![MPoly::zero(n); (r.max(-1) + 1) as usize];
    if r >= 0 {
        conv[0] = MPoly::one(n);
    }
    for &b in blocks {
        let mut next = vec![MPoly::zero(n); conv.len()];
        for (s, acc) in next.iter_mut().enumerate() {
            for a in 0..=s {
                let g = gen(kind, a as i64, nu, b);
                if !g.is_zero() && !conv[s - a].is_zero() {
                    *acc += &(&conv[s - a] * &g);
                }
            }
        }
        conv = next;
    }
    let p = if r < 0 {
        MPoly::zero(n)
    } else {
        conv.pop().unwrap()
    };
    Ok(BlockSymPoly::trusted(p, nu))
}

fn partitions_bounded(r: u32, max_part: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
    if r == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max_part.min(r)).rev() {
        cur.push(p);
        partitions_bounded(r - p, p, out, cur);
        cur.pop();
    }
}

/// Distributions of `r` among the blocks: for each block a partition of its
/// share into parts at most the block size.
fn block_partitions(nu: &Composition, r: u32) -> Vec<Vec<Vec<u32>>> {
    fn rec(nu: &[u32], r: u32, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let Some((&d, rest)) = nu.split_first() else {
            if r == 0 {
                out.push(cur.clone());
            }
            return;
        };
        for share in 0..=r {
            if d == 0 && share > 0 {
                break;
            }
            let mut parts = Vec::new();
            partitions_bounded(share, d, &mut parts, &mut Vec::new());
            for p in parts {
                cur.push(p);
                rec(rest, r - share, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(nu.parts(), r, &mut Vec::new(), &mut out);
    out
}

/// Products of `e_s(ν; i)` of total half-degree `r`: a basis of `(P_ν)_{2r}`.
pub fn graded_basis(nu: &Composition, r: u32) -> Vec<BlockSymPoly> {
    let n = nu.total() as usize;
    block_partitions(nu, r)
        .into_iter()
        .map(|choice| {
            let mut p = MPoly::one(n);
            for (b, parts) in choice.iter().enumerate() {
                for &s in parts {
                    p = &p * &gen(Kind::E, s as i64, nu, b + 1);
                }
            }
            BlockSymPoly::trusted(p, nu)
        })
        .collect()
}

/// Monomials of half-degree `r` whose exponents weakly decrease inside each
/// block. Coefficients on these are coordinates on `(P_ν)_{2r}`.
pub fn sorted_monomials(nu: &Composition, r: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    fn rec(nu: &Composition, b: usize, left: u32, m: &mut Monomial, out: &mut Vec<Monomial>) {
        if b > nu.n() {
            if left == 0 {
                out.push(*m);
            }
            return;
        }
        let range = nu.block_range(b);
        for share in 0..=left {
            if range.is_empty() && share > 0 {
                break;
            }
            let mut parts = Vec::new();
            // exponents in a block: a partition of `share` with at most |block| parts
            partitions_bounded_len(share, share, range.len(), &mut parts, &mut Vec::new());
            for p in parts {
                for (slot, &e) in range.clone().zip(&p) {
                    m.set(slot, e);
                }
                rec(nu, b + 1, left - share, m, out);
                for slot in range.clone() {
                    m.set(slot, 0);
                }
            }
        }
    }
    let mut m = Monomial::ONE;
    rec(nu, 1, r, &mut m, &mut out);
    out
}

fn partitions_bounded_len(
    r: u32,
    max_part: u32,
    max_len: usize,
    out: &mut Vec<Vec<u32>>,
    cur: &mut Vec<u32>,
) {
    if r == 0 {
        out.push(cur.clone());
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(r)).rev() {
        cur.push(p);
        partitions_bounded_len(r - p, p, max_len, out, cur);
        cur.pop();
    }
}

/// Dimension of `(P_ν)_{2r}`.
pub fn graded_dim(nu: &Composition, r: u32) -> usize {
    sorted_monomials(nu, r).len()
}

/// Coordinate map for `(P_ν)_{2r}`.
pub struct Coordinates {
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    pub fn new(nu: &Composition, r: u32) -> Coordinates {
        let index = sorted_monomials(nu, r)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Coordinates { index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// Coordinates of a block-symmetric polynomial's homogeneous part of this degree.
    pub fn of(&self, p: &MPoly) -> SparseVec {
        p.terms()
            .filter_map(|(m, c)| self.index.get(m).map(|&i| (i, c.clone())))
            .collect()
    }
}

/// Where the separated variable sits inside the merged block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    First,
    Last,
}

/// Trace `P_{refined} -> P_{merged}` over the block `merged` (0-based variable
/// range), normalized so that `x^a ↦ h_{a-d+1}` of the block, `d` its size.
/// `x` is the first or last variable of the range.
pub fn gysin(p: &MPoly, merged: Range<usize>, pos: Position) -> MPoly {
    let d = merged.len();
    let s = merged.start;
    let mut q = p.clone();
    match pos {
        Position::First => {
            for a in 0..d.saturating_sub(1) {
                q = q.divided_difference(s + a, s + a + 1);
            }
        }
        Position::Last => {
            for a in (0..d.saturating_sub(1)).rev() {
                q = q.divided_difference(s + a, s + a + 1);
            }
            if d.is_multiple_of(2) {
                q = -q;
            }
        }
    }
    q
}

/// The block of `base` containing variable `x` and whether `x` is its first
/// or last variable.
pub fn locate(base: &Composition, x: usize) -> Result<(usize, Range<usize>, Position)> {
    for b in 1..=base.n() {
        let range = base.block_range(b);
        if range.contains(&x) {
            let pos = if x == range.start {
                Position::First
            } else if x + 1 == range.end {
                Position::Last
            } else {
                return Err(Error::Decomposition(format!(
                    "X{} is interior to block {b} of {base:?}",
                    x + 1
                )));
            };
            return Ok((b, range, pos));
        }
    }
    Err(Error::Decomposition(format!("X{} outside {base:?}", x + 1)))
}

/// The refinement of `base` obtained by splitting `x` off its block.
pub fn split_off(base: &Composition, x: usize) -> Result<Composition> {
    let (b, range, pos) = locate(base, x)?;
    let mut parts = base.parts().to_vec();
    let rest = range.len() as u32 - 1;
    let (l, r) = if pos == Position::First {
        (1, rest)
    } else {
        (rest, 1)
    };
    parts.splice(b - 1..b, [l, r]);
    Ok(Composition::new(parts))
}

/// Σ_m q_m X^m.
pub fn recompose(qs: &[MPoly], x: usize) -> MPoly {
    let n = qs.first().map_or(0, MPoly::nvars);
    let mut acc = MPoly::zero(n);
    for (m, q) in qs.iter().enumerate() {
        acc += &q.mul_monomial(&Monomial::var(x, m as u32), &BigInt::one());
    }
    acc
}

fn check_rank(base: &Composition, x: usize, rank: usize) -> Result<(Range<usize>, Position)> {
    let (_, range, pos) = locate(base, x)?;
    if range.len() != rank {
        return Err(Error::Decomposition(format!(
            "rank {rank} does not match block size {} of X{} in {base:?}",
            range.len(),
            x + 1
        )));
    }
    Ok((range, pos))
}

/// Coefficients `q_0..q_{rank-1}` in `P_base` with `p = Σ q_m X_{x+1}^m`.
///
/// Uses the trace-dual basis `b_m = Σ_l (-1)^l e_l(T) x^{d-1-m-l}` so that
/// `q_m = tr(p·b_m)`; the result is checked by recomposition.
pub fn free_decompose(p: &MPoly, x: usize, base: &Composition, rank: usize) -> Result<Vec<MPoly>> {
    let (range, pos) = check_rank(base, x, rank)?;
    let n = p.nvars();
    let d = rank as i64;
    let mut qs = Vec::with_capacity(rank);
    for m in 0..d {
        let mut b = MPoly::zero(n);
        for l in 0..(d - m) {
            let e = sym_range(Kind::E, l, range.clone(), n);
            let term = e.mul_monomial(&Monomial::var(x, (d - 1 - m - l) as u32), &BigInt::one());
            if l % 2 == 0 {
                b += &term;
            } else {
                b -= &term;
            }
        }
        qs.push(gysin(&(p * &b), range.clone(), pos));
    }
    if recompose(&qs, x) != *p {
        return Err(Error::Decomposition(format!(
            "{p} is not in the refined ring over {base:?}"
        )));
    }
    Ok(qs)
}

/// Reference route: one exact linear solve per graded piece against
/// `{X^m · b : b in graded_basis(base)}`.
pub fn free_decompose_linear(
    p: &MPoly,
    x: usize,
    base: &Composition,
    rank: usize,
) -> Result<Vec<MPoly>> {
    check_rank(base, x, rank)?;
    let fine = split_off(base, x)?;
    let n = p.nvars();
    let mut qs = vec![MPoly::zero(n); rank];
    let Some(top) = p.max_half_degree() else {
        return Ok(qs);
    };
    for deg in 0..=top {
        let piece = p.graded_piece(deg);
        if piece.is_zero() {
            continue;
        }
        let coords = Coordinates::new(&fine, deg);
        let mut labels = Vec::new();
        let mut columns = Vec::new();
        for m in 0..rank as u32 {
            if m > deg {
                break;
            }
            for b in graded_basis(base, deg - m) {
                let col = b.poly.mul_monomial(&Monomial::var(x, m), &BigInt::one());
                columns.push(coords.of(&col));
                labels.push((m as usize, b.poly));
            }
        }
        let sol = linalg::solve(&columns, &coords.of(&piece))
            .map_err(|e| Error::Decomposition(format!("degree {deg}: {e:?}")))?;
        for ((m, b), c) in labels.into_iter().zip(sol) {
            if !c.is_integer() {
                return Err(Error::Decomposition(format!(
                    "non-integral coefficient {c}"
                )));
            }
            let c = c.to_integer();
            if !c.is_zero() {
                qs[m] += &b.scale(&c);
            }
        }
    }
    if recompose(&qs, x) != *p {
        return Err(Error::Decomposition("recomposition mismatch".into()));
    }
    Ok(qs)
}
