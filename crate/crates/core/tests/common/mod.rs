// Shared helpers and independent oracles for the integration tests.
#![allow(dead_code)]

use polrep::{Composition, Partition, TPoly};

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn comp(v: &[u32]) -> Composition {
    Composition::from(v)
}

/// Semistandard tableaux of shape `shape` with content `content`, counted
/// by filling cells in reading order.
pub fn ssyt_count(shape: &[u32], content: &[u32]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut left = content.to_vec();
    fill(&cells, 0, &mut grid, &mut left)
}

fn fill(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<u32>>, left: &mut Vec<u32>) -> u64 {
    let Some(&(r, c)) = cells.get(k) else {
        return 1;
    };
    let mut total = 0;
    for v in 1..=left.len() as u32 {
        if left[v as usize - 1] == 0 {
            continue;
        }
        if c > 0 && grid[r][c - 1] > v {
            continue;
        }
        if r > 0 && grid[r - 1][c] >= v {
            continue;
        }
        grid[r][c] = v;
        left[v as usize - 1] -= 1;
        total += fill(cells, k + 1, grid, left);
        left[v as usize - 1] += 1;
    }
    grid[r][c] = 0;
    total
}

/// Exact division of polynomials in `t` with integer coefficients.
pub fn divide(num: &TPoly, den: &TPoly) -> TPoly {
    let mut rem = num.clone();
    let mut q = TPoly::zero();
    let (dt, dc) = (den.max_exp().unwrap(), den.coeff(den.max_exp().unwrap()));
    while let Some(rt) = rem.max_exp() {
        if rt < dt {
            break;
        }
        let c = rem.coeff(rt);
        assert_eq!(c % dc, 0, "inexact division");
        let step = TPoly::monomial(rt - dt, c / dc);
        q += &step;
        rem = &rem - &(&step * den);
    }
    assert!(rem.is_zero(), "inexact division");
    q
}

/// `1 - t^k`.
pub fn one_minus(k: i32) -> TPoly {
    TPoly::from_pairs(&[(0, 1), (k, -1)])
}
