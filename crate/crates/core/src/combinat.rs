//! Compositions, partitions, sl_n weights and their combinatorics.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tpoly::TPoly;

/// An ordered tuple of non-negative integers. Trailing zeros are significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

/// Weight `ν̄` with `ν̄_i = ν_i - ν_{i+1}`.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        Composition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of parts `n`.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i`, 1-based.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `k_i = ν_1 + ... + ν_i`.
    pub fn k(&self, i: usize) -> usize {
        self.0[..i].iter().sum::<u32>() as usize
    }

    /// 0-based variable indices of block `i` (1-based).
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        self.k(i - 1)..self.k(i)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Sorted into weakly decreasing order.
    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition(v))
    }

    pub fn padded(&self, n: usize) -> Composition {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        Composition(v)
    }

    /// Add `m` to every part.
    pub fn shifted(&self, m: u32) -> Composition {
        Composition(self.0.iter().map(|&p| p + m).collect())
    }

    pub fn scalar(&self, other: &Composition) -> u64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as u64 * b as u64)
            .sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for piece in s.split(',') {
            let v = piece.trim().parse::<u32>().map_err(|e| Error::Parse {
                pos,
                msg: format!("bad part {piece:?}: {e}"),
            })?;
            parts.push(v);
            pos += piece.len() + 1;
        }
        Ok(Composition(parts))
    }
}

impl serde::Serialize for Composition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl From<Vec<u32>> for Composition {
    fn from(v: Vec<u32>) -> Self {
        Composition(v)
    }
}

impl From<&[u32]> for Composition {
    fn from(v: &[u32]) -> Self {
        Composition(v.to_vec())
    }
}

/// A composition with weakly decreasing parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        Partition::try_from(Composition(parts))
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    pub fn into_composition(self) -> Composition {
        self.0
    }

    pub fn padded(&self, n: usize) -> Partition {
        Partition(self.0.padded(n))
    }

    pub fn shifted(&self, m: u32) -> Partition {
        Partition(self.0.shifted(m))
    }

    /// Nonzero parts only.
    pub fn trimmed(&self) -> Partition {
        Partition(Composition(
            self.0 .0.iter().copied().filter(|&p| p > 0).collect(),
        ))
    }
}

impl TryFrom<Composition> for Partition {
    type Error = Error;
    fn try_from(c: Composition) -> Result<Partition> {
        if c.is_partition() {
            Ok(Partition(c))
        } else {
            Err(Error::NotPartition(c.to_string()))
        }
    }
}

impl Deref for Partition {
    type Target = Composition;
    fn deref(&self) -> &Composition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        Partition::try_from(s.parse::<Composition>()?)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn weight_of(nu: &Composition) -> Weight {
    nu.0.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect()
}

fn check_index(nu: &Composition, i: usize) -> Result<()> {
    if i == 0 || i >= nu.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: nu.n().saturating_sub(1),
        });
    }
    Ok(())
}

/// `ν ± α_i`, or `None` when a part would become negative.
pub fn add_root(nu: &Composition, i: usize, sign: Sign) -> Result<Option<Composition>> {
    check_index(nu, i)?;
    let mut v = nu.0.clone();
    let (dec, inc) = match sign {
        Sign::Plus => (i, i - 1),
        Sign::Minus => (i - 1, i),
    };
    if v[dec] == 0 {
        return Ok(None);
    }
    v[dec] -= 1;
    v[inc] += 1;
    Ok(Some(Composition(v)))
}

fn check_same_shape(a: &Composition, b: &Composition) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch(a.n(), b.n()));
    }
    if a.total() != b.total() {
        return Err(Error::TotalMismatch(a.total(), b.total()));
    }
    Ok(())
}

/// `ν ≤ μ` in dominance order.
pub fn dominance_leq(nu: &Composition, mu: &Composition) -> Result<bool> {
    check_same_shape(nu, mu)?;
    let mut acc = 0i64;
    for (&a, &b) in nu.0.iter().zip(&mu.0) {
        acc += b as i64 - a as i64;
        if acc < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conjugate partition, with `λ_1` parts.
pub fn transpose(lambda: &Partition) -> Partition {
    let first = lambda.0 .0.first().copied().unwrap_or(0);
    let parts = (1..=first)
        .map(|c| lambda.0 .0.iter().filter(|&&p| p >= c).count() as u32)
        .collect();
    Partition(Composition(parts))
}

/// `max{(λ,λ) - (ν,ν), 0}`.
pub fn degree_gap(lambda: &Composition, nu: &Composition) -> Result<u64> {
    check_same_shape(lambda, nu)?;
    Ok(lambda.scalar(lambda).saturating_sub(nu.scalar(nu)))
}

/// Gaussian binomial `[n choose k]_t`.
pub fn t_binomial(n: u32, k: u32) -> TPoly {
    if k > n {
        return TPoly::zero();
    }
    // row[j] = [m choose j]_t, built up in m.
    let mut row = vec![TPoly::one()];
    for m in 1..=n {
        let mut next = vec![TPoly::one(); (m + 1) as usize];
        for j in 1..m as usize {
            next[j] = &row[j - 1] + &row[j].shift(j as i32);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `[N]_t! / Π [ν_i]_t!`.
pub fn t_multinomial(total: u32, nu: &Composition) -> Result<TPoly> {
    if nu.total() != total {
        return Err(Error::TotalMismatch(total, nu.total()));
    }
    let mut acc = TPoly::one();
    let mut run = 0;
    for &p in &nu.0 {
        run += p;
        acc = &acc * &t_binomial(run, p);
    }
    Ok(acc)
}

/// All `n`-compositions of `total`, lexicographically ascending.
pub fn enumerate_compositions(n: usize, total: u32) -> Vec<Composition> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All partitions of `total` into at most `n` parts, zero-padded to length `n`,
/// lexicographically ascending.
pub fn enumerate_partitions(n: usize, total: u32) -> Vec<Partition> {
    enumerate_compositions(n, total)
        .into_iter()
        .filter(Composition::is_partition)
        .map(Partition)
        .collect()
}

/// Permutations of `0..n` in lexicographic order, with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let inversions = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        out.push((perm.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        // next lexicographic permutation
        let Some(a) = (0..n.saturating_sub(1))
            .rev()
            .find(|&a| perm[a] < perm[a + 1])
        else {
            break;
        };
        let b = (a + 1..n).rev().find(|&b| perm[b] > perm[a]).unwrap();
        perm.swap(a, b);
        perm[a + 1..].reverse();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) / (j + 1))
}
