//! Kostka–Foulkes polynomials by the alternating sum over the symmetric
//! group, and Kostka numbers by counting semistandard tableaux.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};
use crate::tpoly::TPoly;

thread_local! {
    static P_CACHE: RefCell<HashMap<Vec<i64>, TPoly>> = RefCell::new(HashMap::new());
}

/// `Σ t^{Σ m_α}` over families `{m_α ≥ 0}` of positive roots `e_a - e_b`
/// (`a < b`) with `Σ m_α α = ξ`. Zero unless `Σ ξ = 0`.
pub fn p_polynomial(xi: &[i64]) -> TPoly {
    if xi.iter().sum::<i64>() != 0 {
        return TPoly::zero();
    }
    p_rec(xi)
}

fn p_rec(xi: &[i64]) -> TPoly {
    // Roots e_1 - e_b carry all of ξ_1; distribute it and recurse on the tail.
    let Some((&first, rest)) = xi.split_first() else {
        return TPoly::one();
    };
    if first < 0 {
        return TPoly::zero();
    }
    if rest.is_empty() {
        return if first == 0 {
            TPoly::one()
        } else {
            TPoly::zero()
        };
    }
    if let Some(hit) = P_CACHE.with(|c| c.borrow().get(xi).cloned()) {
        return hit;
    }
    let mut out = TPoly::zero();
    let mut tail = rest.to_vec();
    distribute(first, 0, &mut tail, &mut |tail| {
        // prefix sums of a non-negative root combination are non-negative
        let mut acc = 0;
        for &v in tail.iter() {
            acc += v;
            if acc < 0 {
                return;
            }
        }
        out += &p_rec(tail).shift(first as i32);
    });
    P_CACHE.with(|c| c.borrow_mut().insert(xi.to_vec(), out.clone()));
    out
}

/// Add every way of writing `left` as a sum of non-negative parts over the
/// positions `from..` of `tail`.
fn distribute(left: i64, from: usize, tail: &mut [i64], f: &mut dyn FnMut(&[i64])) {
    if from + 1 == tail.len() {
        tail[from] += left;
        f(tail);
        tail[from] -= left;
        return;
    }
    for m in 0..=left {
        tail[from] += m;
        distribute(left - m, from + 1, tail, f);
        tail[from] -= m;
    }
}

fn nonzero_len(v: &[u32]) -> usize {
    v.iter().rposition(|&p| p > 0).map_or(0, |p| p + 1)
}

/// `K_{λ,μ}(t)` with both padded to `len` parts.
pub fn kostka_foulkes_padded(lambda: &[u32], mu: &[u32], len: usize) -> TPoly {
    let pad = |v: &[u32]| -> Vec<i64> {
        let mut w: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        w.resize(len, 0);
        w
    };
    let (l, m) = (pad(lambda), pad(mu));
    // λ+δ and μ+δ with δ = (len-1, ..., 0)
    let ld: Vec<i64> = l
        .iter()
        .enumerate()
        .map(|(k, &v)| v + (len - 1 - k) as i64)
        .collect();
    let md: Vec<i64> = m
        .iter()
        .enumerate()
        .map(|(k, &v)| v + (len - 1 - k) as i64)
        .collect();
    let mut out = TPoly::zero();
    let mut used = vec![false; len];
    let mut xi = Vec::with_capacity(len);
    signed_perms(&ld, &md, &mut used, &mut xi, 0, 1, &mut out);
    out
}

fn signed_perms(
    ld: &[i64],
    md: &[i64],
    used: &mut [bool],
    xi: &mut Vec<i64>,
    prefix: i64,
    sign: i64,
    out: &mut TPoly,
) {
    let k = xi.len();
    if k == ld.len() {
        *out += &(&p_polynomial(xi) * sign);
        return;
    }
    let mut flips = 0;
    for src in 0..ld.len() {
        if used[src] {
            continue;
        }
        // sign of the permutation: count unused positions skipped
        let s = if flips % 2 == 0 { sign } else { -sign };
        flips += 1;
        let v = ld[src] - md[k];
        if prefix + v < 0 {
            continue;
        }
        used[src] = true;
        xi.push(v);
        signed_perms(ld, md, used, xi, prefix + v, s, out);
        xi.pop();
        used[src] = false;
    }
}

/// `K_{λ,μ}(t)`; a composition `μ` is sorted first.
pub fn kostka_foulkes(lambda: &Partition, mu: &Composition) -> Result<TPoly> {
    if lambda.total() != mu.total() {
        return Err(Error::TotalMismatch(lambda.total(), mu.total()));
    }
    let mu = mu.sorted();
    let len = nonzero_len(lambda.parts())
        .max(nonzero_len(mu.parts()))
        .max(1);
    Ok(kostka_foulkes_padded(lambda.parts(), mu.parts(), len))
}

/// Number of semistandard tableaux of shape `λ` and content `ν`, built as
/// chains of horizontal strips.
pub fn kostka_number(lambda: &Partition, nu: &Composition) -> Result<u64> {
    if lambda.total() != nu.total() {
        return Err(Error::TotalMismatch(lambda.total(), nu.total()));
    }
    let shape: Vec<u32> = lambda.parts()[..nonzero_len(lambda.parts())].to_vec();
    let mut memo = HashMap::new();
    Ok(strips(&shape, nu.parts(), vec![0; shape.len()], &mut memo))
}

fn strips(
    shape: &[u32],
    content: &[u32],
    cur: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), u64>,
) -> u64 {
    let Some((&size, rest)) = content.split_first() else {
        return u64::from(cur == shape);
    };
    let key = (content.len(), cur.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut next = cur.clone();
    add_strip(shape, &cur, &mut next, 0, size, &mut |nx| {
        total += strips(shape, rest, nx.to_vec(), memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerate `next ⊇ cur` inside `shape` with `next / cur` a horizontal strip
/// of `left` boxes (row `r` may grow up to `cur[r-1]`).
fn add_strip(
    shape: &[u32],
    cur: &[u32],
    next: &mut Vec<u32>,
    row: usize,
    left: u32,
    f: &mut dyn FnMut(&[u32]),
) {
    if row == shape.len() {
        if left == 0 {
            f(next);
        }
        return;
    }
    let cap = if row == 0 {
        shape[0]
    } else {
        shape[row].min(cur[row - 1])
    };
    let room = cap.saturating_sub(cur[row]);
    for add in 0..=room.min(left) {
        next[row] = cur[row] + add;
        add_strip(shape, cur, next, row + 1, left - add, f);
    }
    next[row] = cur[row];
}
