//! Exact sparse linear algebra over the rationals.
//!
//! Rows are integer vectors; elimination is fraction-free with content
//! removal, so entries stay integral and small.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type SparseVec = BTreeMap<usize, BigInt>;

fn make_primitive(v: &mut SparseVec) {
    let mut g = BigInt::zero();
    for c in v.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    let lead_neg = v.values().next().is_some_and(|c| c.is_negative());
    if g > BigInt::one() || lead_neg {
        let g = if lead_neg { -g } else { g };
        for c in v.values_mut() {
            *c = &*c / &g;
        }
    }
}

/// Row echelon form keyed by leading column.
#[derive(Default, Clone)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let Some((&lead, _)) = v.iter().next() else {
                return v;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                return v;
            };
            let a = v[&lead].clone();
            let b = piv[&lead].clone();
            // v <- b*v - a*piv, which cancels the leading entry.
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            if !b.is_one() {
                for c in v.values_mut() {
                    *c *= &b;
                }
            }
            for (k, c) in piv {
                let e = v.entry(*k).or_insert_with(BigInt::zero);
                *e -= &a * c;
                if e.is_zero() {
                    v.remove(k);
                }
            }
            make_primitive(&mut v);
        }
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        match v.keys().next() {
            Some(&lead) => {
                self.pivots.insert(lead, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn to_mod(c: &BigInt) -> u64 {
    let r = c.mod_floor(&BigInt::from(P));
    r.to_u64().unwrap()
}

/// Row echelon form over `F_p`, `p = 2^61 - 1`. Independence mod `p`
/// implies independence over the rationals.
#[derive(Default, Clone)]
pub struct ModEchelon {
    pivots: BTreeMap<usize, BTreeMap<usize, u64>>,
}

impl ModEchelon {
    pub fn new() -> ModEchelon {
        ModEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &SparseVec) -> bool {
        let mut v: BTreeMap<usize, u64> = row
            .iter()
            .map(|(&k, c)| (k, to_mod(c)))
            .filter(|&(_, c)| c != 0)
            .collect();
        loop {
            let Some((&lead, &a)) = v.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(piv) => {
                    // pivots are normalized to leading coefficient 1
                    for (&k, &c) in piv {
                        let e = v.entry(k).or_insert(0);
                        *e = (*e + P - mulmod(a, c)) % P;
                        if *e == 0 {
                            v.remove(&k);
                        }
                    }
                }
                None => {
                    let inv = powmod(a, P - 2);
                    for c in v.values_mut() {
                        *c = mulmod(*c, inv);
                    }
                    self.pivots.insert(lead, v);
                    return true;
                }
            }
        }
    }

    /// Basis of the vectors orthogonal to every inserted row, over `F_p`,
    /// one per non-pivot column below `ncols`.
    pub fn kernel(&self, ncols: usize) -> Vec<BTreeMap<usize, u64>> {
        // back-substitute from the last pivot to get the reduced form
        let mut reduced: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut v = row.clone();
            let later: Vec<(usize, u64)> = v
                .iter()
                .filter(|&(&k, _)| k != lead && reduced.contains_key(&k))
                .map(|(&k, &c)| (k, c))
                .collect();
            for (k, a) in later {
                for (&j, &c) in &reduced[&k] {
                    let e = v.entry(j).or_insert(0);
                    *e = (*e + P - mulmod(a, c)) % P;
                    if *e == 0 {
                        v.remove(&j);
                    }
                }
            }
            reduced.insert(lead, v);
        }
        let mut by_free: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for f in (0..ncols).filter(|f| !reduced.contains_key(f)) {
            by_free.insert(f, BTreeMap::from([(f, 1)]));
        }
        for (&lead, row) in &reduced {
            for (&k, &c) in row {
                if let Some(w) = by_free.get_mut(&k) {
                    w.insert(lead, (P - c) % P);
                }
            }
        }
        by_free.into_values().collect()
    }

    /// The kernel lifted to integer vectors and checked exactly against
    /// `rows`. Success proves that the rational rank of `rows` equals the
    /// modular rank; `None` means the lift failed or did not check out.
    pub fn certified_kernel(&self, rows: &[SparseVec], ncols: usize) -> Option<Vec<SparseVec>> {
        let mut out = Vec::new();
        for w in self.kernel(ncols) {
            let fracs: Vec<(usize, BigInt, BigInt)> = w
                .iter()
                .map(|(&k, &c)| reconstruct(c).map(|(a, b)| (k, a, b)))
                .collect::<Option<_>>()?;
            let den = fracs
                .iter()
                .fold(BigInt::one(), |acc, (_, _, b)| acc.lcm(b));
            let v: SparseVec = fracs
                .into_iter()
                .map(|(k, a, b)| (k, a * (&den / b)))
                .collect();
            out.push(v);
        }
        for row in rows {
            for w in &out {
                let dot: BigInt = row
                    .iter()
                    .filter_map(|(k, c)| w.get(k).map(|x| c * x))
                    .sum();
                if !dot.is_zero() {
                    return None;
                }
            }
        }
        Some(out)
    }
}

/// `a/b ≡ c (mod p)` with `|a|, b < sqrt(p/2)`, if one exists.
fn reconstruct(c: u64) -> Option<(BigInt, BigInt)> {
    let bound = 1u64 << 30;
    let (mut r0, mut r1) = (P as i128, c as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 as u64 >= bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.unsigned_abs() >= bound as u128 {
        return None;
    }
    let (a, b) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some((BigInt::from(a), BigInt::from(b)))
}

/// Exact membership in a row span described by its orthogonal complement.
pub fn orthogonal_to(v: &SparseVec, kernel: &[SparseVec]) -> bool {
    kernel.iter().all(|w| {
        v.iter()
            .filter_map(|(k, c)| w.get(k).map(|x| c * x))
            .sum::<BigInt>()
            .is_zero()
    })
}

/// Rank over `F_p` for a large prime; a lower bound for the rational rank.
pub fn rank_mod_p(rows: &[SparseVec]) -> usize {
    let mut ech = ModEchelon::new();
    for row in rows {
        ech.insert(row);
    }
    ech.rank()
}

/// Exact rank of the row span, with a modular shortcut when the
/// modular rank already reaches the trivial upper bound.
pub fn rank(rows: Vec<SparseVec>, ncols: usize) -> usize {
    let bound = rows.len().min(ncols);
    if rank_mod_p(&rows) == bound {
        return bound;
    }
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
        if ech.rank() == ncols {
            break;
        }
    }
    ech.rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    Underdetermined,
}

/// Unique solution of `Σ_j x_j · columns[j] = target`.
pub fn solve(columns: &[SparseVec], target: &SparseVec) -> Result<Vec<BigRational>, SolveError> {
    let ncols = columns.len();
    // Equation rows: one per coordinate that appears anywhere.
    let mut coords: Vec<usize> = columns.iter().flat_map(|c| c.keys().copied()).collect();
    coords.extend(target.keys().copied());
    coords.sort_unstable();
    coords.dedup();
    let mut m: Vec<Vec<BigRational>> = coords
        .iter()
        .map(|k| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from_integer(c.get(k).cloned().unwrap_or_default()))
                .collect();
            row.push(BigRational::from_integer(
                target.get(k).cloned().unwrap_or_default(),
            ));
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i][c..=ncols].iter_mut().zip(&pivot[c..=ncols]) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    if pivot_cols.len() < ncols {
        return Err(SolveError::Underdetermined);
    }
    Ok((0..ncols).map(|i| m[i][ncols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, BigInt::from(c))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 2), (1, 4)])));
        assert!(e.insert(sv(&[(1, 3), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (1, 5), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(sv(&[(0, 4), (1, 5), (2, -1)])));
        assert!(!e.contains(sv(&[(2, 1)])));
    }

    #[test]
    fn modular_rank_agrees() {
        let rows = vec![
            sv(&[(0, 1), (1, 1)]),
            sv(&[(0, 1), (1, -1)]),
            sv(&[(0, 3), (1, 1)]),
        ];
        assert_eq!(rank_mod_p(&rows), 2);
        assert_eq!(rank(rows, 2), 2);
        assert_eq!(rank(vec![sv(&[(0, 2)]), sv(&[(0, 6)])], 3), 1);
    }

    #[test]
    fn certified_kernel_matches_exact() {
        let rows = vec![
            sv(&[(0, 2), (1, 4), (2, 1)]),
            sv(&[(1, 3), (3, -1)]),
            sv(&[(0, 2), (1, 7), (2, 1), (3, -1)]),
        ];
        let mut m = ModEchelon::new();
        for r in &rows {
            m.insert(r);
        }
        assert_eq!(m.rank(), 2);
        let w = m.certified_kernel(&rows, 4).unwrap();
        assert_eq!(w.len(), 2);
        assert!(orthogonal_to(&sv(&[(0, 4), (1, 11), (2, 2), (3, -1)]), &w));
        assert!(!orthogonal_to(&sv(&[(3, 1)]), &w));
        assert_eq!(
            reconstruct(mulmod(to_mod(&BigInt::from(-3)), powmod(7, P - 2))),
            Some((BigInt::from(-3), BigInt::from(7)))
        );
    }

    #[test]
    fn solve_small_system() {
        let cols = vec![sv(&[(0, 1), (1, 1)]), sv(&[(0, 1), (1, -1)])];
        let x = solve(&cols, &sv(&[(0, 3), (1, 1)])).unwrap();
        assert_eq!(
            x,
            vec![
                BigRational::from_integer(2.into()),
                BigRational::from_integer(1.into())
            ]
        );
        assert_eq!(
            solve(&cols[..1], &sv(&[(0, 1)])),
            Err(SolveError::Inconsistent)
        );
    }
}
