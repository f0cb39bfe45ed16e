//! The ideals `I^λ_ν ⊂ P_ν`, graded dimensions of the quotients
//! `C^λ_ν = P_ν / I^λ_ν`, and the descent of the current-algebra action.
//!
//! Ideals are handled degree by degree in the coordinates of
//! [`sorted_monomials`]: a block-symmetric polynomial is determined by its
//! coefficients on monomials whose exponents weakly decrease inside each
//! block. Since `P_ν` is generated by the `e_s(ν;b)`, the degree-`r` part of
//! an ideal is spanned by its generators of degree `r` together with
//! `e_s(ν;b) · I_{r-s}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{
    degree_gap, dominance_leq, enumerate_partitions, transpose, Composition, Partition,
};
use crate::current::{apply_e, apply_f, WeightVector};
use crate::error::{Error, Result};
use crate::kostka::{kostka_foulkes, kostka_number};
use crate::linalg::{orthogonal_to, Echelon, ModEchelon, SparseVec};
use crate::poly::{MPoly, Monomial};
use crate::sympoly::{multi_block, sorted_monomials, BlockSymPoly, Kind};
use crate::tpoly::TPoly;

/// `λ` zero-padded or trimmed to `n` parts.
pub fn align(lambda: &Partition, n: usize) -> Result<Partition> {
    let len = lambda
        .parts()
        .iter()
        .rposition(|&p| p > 0)
        .map_or(0, |p| p + 1);
    if len > n {
        return Err(Error::LengthMismatch(lambda.n(), n));
    }
    let mut parts = lambda.parts()[..len].to_vec();
    parts.resize(n, 0);
    Partition::new(parts)
}

fn check(lambda: &Partition, nu: &Composition) -> Result<Partition> {
    if lambda.total() != nu.total() {
        return Err(Error::TotalMismatch(lambda.total(), nu.total()));
    }
    align(lambda, nu.n())
}

/// `h_r(ν; blocks)`, one generator of `I^λ_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealGenerator {
    pub r: u32,
    pub blocks: Vec<usize>,
}

impl IdealGenerator {
    pub fn poly(&self, nu: &Composition) -> BlockSymPoly {
        multi_block(Kind::H, self.r as i64, nu, &self.blocks)
            .expect("blocks are in range and increasing")
    }
}

/// Generators of `I^λ_ν` of half-degree at most `r_max`.
pub fn generator_specs(
    lambda: &Partition,
    nu: &Composition,
    r_max: u32,
) -> Result<Vec<IdealGenerator>> {
    let lambda = check(lambda, nu)?;
    let n = nu.n();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let blocks: Vec<usize> = (0..n)
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| b + 1)
            .collect();
        let m = blocks.len();
        let slack: i64 = lambda.parts()[..m].iter().map(|&p| p as i64).sum::<i64>()
            - blocks.iter().map(|&b| nu.part(b) as i64).sum::<i64>();
        let from = (slack + 1).max(0) as u32;
        for r in from..=r_max {
            out.push(IdealGenerator {
                r,
                blocks: blocks.clone(),
            });
        }
    }
    Ok(out)
}

/// Generators of `I^λ_ν` of half-degree at most `r_max`, as polynomials.
pub fn ideal_generators(
    lambda: &Partition,
    nu: &Composition,
    r_max: u32,
) -> Result<Vec<BlockSymPoly>> {
    Ok(generator_specs(lambda, nu, r_max)?
        .iter()
        .map(|g| g.poly(nu))
        .collect())
}

/// Where an ideal's generators come from.
#[derive(Clone, Debug)]
pub enum Generators {
    /// `I^λ_ν`.
    Coinvariant(Partition),
    /// Arbitrary homogeneous block-symmetric polynomials.
    Polys(Vec<MPoly>),
}

/// One homogeneous piece `(P_ν)_{2r}` with its coordinate index.
struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

enum Span {
    /// the whole piece
    Full,
    /// independent rows over the rationals
    Rows(Vec<SparseVec>),
}

/// Exact membership test for a piece that is not full.
enum Membership {
    /// integer vectors spanning the orthogonal complement
    Kernel(Vec<SparseVec>),
    Echelon(Echelon),
}

/// The ideal generated by `gens`, computed degree by degree on demand.
pub struct GradedIdeal {
    nu: Composition,
    gens: Generators,
    pieces: Vec<Piece>,
    spans: Vec<Span>,
    /// `(block, s, r)` -> for each source coordinate in degree `r`, its
    /// targets in degree `r + s` under multiplication by `e_s(ν; block)`
    tables: HashMap<(usize, u32, u32), Vec<Vec<usize>>>,
    exact: HashMap<u32, Membership>,
}

fn sort_block(m: &mut Monomial, range: std::ops::Range<usize>) {
    let mut e: Vec<u32> = range.clone().map(|k| m.exp(k)).collect();
    e.sort_unstable_by(|a, b| b.cmp(a));
    for (k, v) in range.zip(e) {
        m.set(k, v);
    }
}

fn subsets(
    items: &[usize],
    s: usize,
    from: usize,
    cur: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if cur.len() == s {
        f(cur);
        return;
    }
    for k in from..items.len() {
        cur.push(items[k]);
        subsets(items, s, k + 1, cur, f);
        cur.pop();
    }
}

impl GradedIdeal {
    pub fn new(nu: &Composition, gens: Generators) -> GradedIdeal {
        GradedIdeal {
            nu: nu.clone(),
            gens,
            pieces: Vec::new(),
            spans: Vec::new(),
            tables: HashMap::new(),
            exact: HashMap::new(),
        }
    }

    pub fn coinvariant(lambda: &Partition, nu: &Composition) -> Result<GradedIdeal> {
        let lambda = check(lambda, nu)?;
        Ok(GradedIdeal::new(nu, Generators::Coinvariant(lambda)))
    }

    pub fn nu(&self) -> &Composition {
        &self.nu
    }

    fn piece(&mut self, r: u32) -> &Piece {
        while self.pieces.len() <= r as usize {
            let monomials = sorted_monomials(&self.nu, self.pieces.len() as u32);
            let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            self.pieces.push(Piece { monomials, index });
        }
        &self.pieces[r as usize]
    }

    /// `dim (P_ν)_{2r}`.
    pub fn ambient_dim(&mut self, r: u32) -> usize {
        self.piece(r).monomials.len()
    }

    pub fn coordinates(&mut self, p: &MPoly, r: u32) -> SparseVec {
        let piece = self.piece(r);
        p.terms()
            .filter_map(|(m, c)| piece.index.get(m).map(|&i| (i, c.clone())))
            .collect()
    }

    /// The block-symmetric polynomial with the given coordinates.
    pub fn polynomial(&mut self, v: &SparseVec, r: u32) -> MPoly {
        let nu = self.nu.clone();
        let n = nu.total() as usize;
        let piece = self.piece(r);
        let mut out = MPoly::zero(n);
        for (&k, c) in v {
            for m in orbit(&piece.monomials[k], &nu) {
                out.add_term(m, c);
            }
        }
        out
    }

    fn table(&mut self, block: usize, s: u32, r: u32) -> &Vec<Vec<usize>> {
        if !self.tables.contains_key(&(block, s, r)) {
            let range = self.nu.block_range(block);
            let vars: Vec<usize> = range.clone().collect();
            let src_len = self.piece(r).monomials.len();
            self.piece(r + s);
            let (src, tgt) = (&self.pieces[r as usize], &self.pieces[(r + s) as usize]);
            // coefficient of T in e_s·p is Σ over s-subsets S of the block of p's
            // coefficient at T/S, which by symmetry sits at sort(T/S)
            let mut out = vec![Vec::new(); src_len];
            for (ti, t) in tgt.monomials.iter().enumerate() {
                let support: Vec<usize> = vars.iter().copied().filter(|&v| t.exp(v) > 0).collect();
                subsets(&support, s as usize, 0, &mut Vec::new(), &mut |sub| {
                    let mut m = *t;
                    for &v in sub {
                        m.set(v, m.exp(v) - 1);
                    }
                    sort_block(&mut m, range.clone());
                    out[src.index[&m]].push(ti);
                });
            }
            self.tables.insert((block, s, r), out);
        }
        &self.tables[&(block, s, r)]
    }

    fn generator_rows(&mut self, r: u32) -> Vec<SparseVec> {
        match self.gens.clone() {
            Generators::Coinvariant(lambda) => {
                let specs = generator_specs(&lambda, &self.nu, r).unwrap();
                let nu = self.nu.clone();
                let piece = self.piece(r);
                specs
                    .into_iter()
                    .filter(|g| g.r == r)
                    .map(|g| {
                        // h_r over a union of blocks has coefficient 1 on every
                        // monomial supported there
                        let allowed: Vec<usize> =
                            g.blocks.iter().flat_map(|&b| nu.block_range(b)).collect();
                        piece
                            .monomials
                            .iter()
                            .enumerate()
                            .filter(|(_, m)| {
                                (0..nu.total() as usize)
                                    .all(|k| m.exp(k) == 0 || allowed.contains(&k))
                            })
                            .map(|(i, _)| (i, BigInt::one()))
                            .collect()
                    })
                    .filter(|v: &SparseVec| !v.is_empty())
                    .collect()
            }
            Generators::Polys(ps) => {
                let hom: Vec<MPoly> = ps
                    .iter()
                    .map(|p| p.graded_piece(r))
                    .filter(|p| !p.is_zero())
                    .collect();
                hom.iter().map(|p| self.coordinates(p, r)).collect()
            }
        }
    }

    fn rows_of(&mut self, r: u32) -> Vec<SparseVec> {
        match &self.spans[r as usize] {
            Span::Full => (0..self.pieces[r as usize].monomials.len())
                .map(|k| SparseVec::from([(k, BigInt::one())]))
                .collect(),
            Span::Rows(rows) => rows.clone(),
        }
    }

    fn candidates(&mut self, r: u32) -> Vec<SparseVec> {
        // sparse products first, dense generators last, to limit fill-in
        let mut out = Vec::new();
        for b in 1..=self.nu.n() {
            for s in 1..=self.nu.part(b).min(r) {
                let lower = self.rows_of(r - s);
                if lower.is_empty() {
                    continue;
                }
                let table = self.table(b, s, r - s).clone();
                for row in lower {
                    let mut img = SparseVec::new();
                    for (k, c) in &row {
                        for &t in &table[*k] {
                            *img.entry(t).or_default() += c;
                        }
                    }
                    img.retain(|_, c| c.sign() != num_bigint::Sign::NoSign);
                    if !img.is_empty() {
                        out.push(img);
                    }
                }
            }
        }
        out.extend(self.generator_rows(r));
        out
    }

    /// Make degrees `0..=r` available.
    pub fn extend_to(&mut self, r: u32) {
        while self.spans.len() <= r as usize {
            let d = self.spans.len() as u32;
            let dim = self.ambient_dim(d);
            let rows = self.candidates(d);
            // modular pass: independent mod p means independent over Q
            let mut modp = ModEchelon::new();
            let mut kept = Vec::new();
            for row in &rows {
                if modp.rank() == dim {
                    break;
                }
                if modp.insert(row) {
                    kept.push(row.clone());
                }
            }
            let span = if modp.rank() == dim {
                Span::Full
            } else if let Some(w) = modp.certified_kernel(&rows, dim) {
                self.exact.insert(d, Membership::Kernel(w));
                Span::Rows(kept)
            } else {
                let mut ech = Echelon::new();
                let mut kept = Vec::new();
                for row in rows {
                    if ech.insert(row.clone()) {
                        kept.push(row);
                    }
                }
                if kept.len() == dim {
                    Span::Full
                } else {
                    self.exact.insert(d, Membership::Echelon(ech));
                    Span::Rows(kept)
                }
            };
            self.spans.push(span);
        }
    }

    /// `dim I_{2r}`.
    pub fn rank(&mut self, r: u32) -> usize {
        self.extend_to(r);
        match &self.spans[r as usize] {
            Span::Full => self.pieces[r as usize].monomials.len(),
            Span::Rows(rows) => rows.len(),
        }
    }

    /// `dim (P_ν / I)_{2r}`.
    pub fn quotient_dim(&mut self, r: u32) -> usize {
        self.ambient_dim(r) - self.rank(r)
    }

    /// A basis of `I_{2r}` as polynomials.
    pub fn basis(&mut self, r: u32) -> Vec<MPoly> {
        self.extend_to(r);
        let rows = self.rows_of(r);
        rows.iter().map(|v| self.polynomial(v, r)).collect()
    }

    /// Membership of a homogeneous block-symmetric polynomial.
    pub fn contains(&mut self, p: &MPoly) -> bool {
        let Some(r) = p.half_degree() else {
            return p.is_zero();
        };
        self.extend_to(r);
        if matches!(self.spans[r as usize], Span::Full) {
            return true;
        }
        let v = self.coordinates(p, r);
        match &self.exact[&r] {
            Membership::Kernel(w) => orthogonal_to(&v, w),
            Membership::Echelon(e) => e.contains(v),
        }
    }
}

/// All distinct monomials obtained by permuting exponents inside blocks.
fn orbit(m: &Monomial, nu: &Composition) -> Vec<Monomial> {
    let mut out = vec![*m];
    for b in 1..=nu.n() {
        let range = nu.block_range(b);
        let mut next = Vec::new();
        for base in &out {
            let mut e: Vec<u32> = range.clone().map(|k| base.exp(k)).collect();
            e.sort_unstable();
            loop {
                let mut x = *base;
                for (k, &v) in range.clone().zip(&e) {
                    x.set(k, v);
                }
                next.push(x);
                if !next_permutation(&mut e) {
                    break;
                }
            }
        }
        out = next;
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Graded dimension of `C^λ_ν` by linear algebra. `P_ν` is generated by
/// the `e_s(ν;b)` with `s ≤ ν_b`, so once `max_b ν_b` consecutive degrees of
/// the ideal are full, every later degree is full as well.
pub fn coinv_graded_dim_linear(lambda: &Partition, nu: &Composition) -> Result<TPoly> {
    let lambda = check(lambda, nu)?;
    let window = nu.parts().iter().copied().max().unwrap_or(0).max(1);
    let mut ideal = GradedIdeal::coinvariant(&lambda, nu)?;
    let mut out = TPoly::zero();
    let (mut r, mut full_run) = (0, 0);
    while full_run < window {
        let q = ideal.quotient_dim(r);
        out.add_term(r as i32, q as i64);
        full_run = if q == 0 { full_run + 1 } else { 0 };
        r += 1;
    }
    Ok(out)
}

/// Graded dimension of `C^λ_ν` from Kostka numbers and Kostka–Foulkes
/// polynomials.
pub fn coinv_graded_dim_formula(lambda: &Partition, nu: &Composition) -> Result<TPoly> {
    let lambda = check(lambda, nu)?;
    if !dominance_leq(&nu.sorted(), &lambda)? {
        return Ok(TPoly::zero());
    }
    let half = (degree_gap(&lambda, nu)? / 2) as i32;
    let lt = transpose(&lambda);
    let mut acc = TPoly::zero();
    for tau in enumerate_partitions(nu.n(), nu.total()) {
        let k = kostka_number(&tau, nu)?;
        if k == 0 || !dominance_leq(&tau, &lambda)? {
            continue;
        }
        let kf = kostka_foulkes(&transpose(&tau), &lt)?;
        acc += &(&kf.invert() * k as i64);
    }
    Ok(acc.shift(half))
}

/// Both routes; `Err` carries the two results when they differ.
pub fn coinv_graded_dim_both(
    lambda: &Partition,
    nu: &Composition,
) -> Result<std::result::Result<TPoly, (TPoly, TPoly)>> {
    let a = coinv_graded_dim_linear(lambda, nu)?;
    let b = coinv_graded_dim_formula(lambda, nu)?;
    Ok(if a == b { Ok(a) } else { Err((a, b)) })
}

/// A failed descent check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DescentWitness {
    pub nu: Composition,
    pub generator: String,
    pub degree: u32,
    pub element: String,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct DescentReport {
    pub checked: usize,
    pub failures: Vec<DescentWitness>,
}

impl DescentReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `ν` with `n` parts and total `N`, every `E_{i,j}`, `F_{i,j}`
/// with `j ≤ j_max`, and every element of a basis of `(I^λ_ν)_{2r}`,
/// `r ≤ cutoff`: the image lies in the target ideal. The degree bases span
/// all products `g·m` of generators with basis elements, so this covers
/// the generators themselves and the submodule they generate in these
/// degrees.
pub fn check_descent(
    lambda: &Partition,
    n: usize,
    total: u32,
    j_max: u32,
    cutoff: u32,
) -> Result<DescentReport> {
    let lambda = align(lambda, n)?;
    if lambda.total() != total {
        return Err(Error::TotalMismatch(lambda.total(), total));
    }
    let weights = crate::combinat::enumerate_compositions(n, total);
    let mut ideals: HashMap<Composition, GradedIdeal> = HashMap::new();
    for nu in &weights {
        ideals.insert(nu.clone(), GradedIdeal::coinvariant(&lambda, nu)?);
    }
    let mut report = DescentReport::default();
    for nu in &weights {
        for r in 0..=cutoff {
            let basis = ideals.get_mut(nu).unwrap().basis(r);
            for v in &basis {
                for i in 1..n {
                    for j in 0..=j_max {
                        for (name, img) in [
                            (
                                format!("E_{{{i},{j}}}"),
                                apply_e(i, j, &WeightVector::new(nu.clone(), v.clone())),
                            ),
                            (
                                format!("F_{{{i},{j}}}"),
                                apply_f(i, j, &WeightVector::new(nu.clone(), v.clone())),
                            ),
                        ] {
                            report.checked += 1;
                            if img.is_zero() {
                                continue;
                            }
                            let tgt = img.nu.clone().unwrap();
                            if !ideals.get_mut(&tgt).unwrap().contains(&img.p) {
                                report.failures.push(DescentWitness {
                                    nu: nu.clone(),
                                    generator: name,
                                    degree: r,
                                    element: v.to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
