//! Graded characters of local Weyl modules, weight space by weight space.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::coinv::{align, coinv_graded_dim_formula, coinv_graded_dim_linear};
use crate::combinat::{
    binomial, degree_gap, dominance_leq, enumerate_compositions, enumerate_partitions, transpose,
};
use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};
use crate::kostka::{kostka_foulkes, kostka_number};
use crate::par::par_map;
use crate::tpoly::TPoly;

/// `ν ↦ K_{τ,ν}` over all compositions with as many parts as `τ`.
pub fn irr_weight_multiplicities(tau: &Partition) -> BTreeMap<Composition, u64> {
    enumerate_compositions(tau.n(), tau.total())
        .into_iter()
        .map(|nu| {
            let k = kostka_number(tau, &nu).expect("equal totals");
            (nu, k)
        })
        .filter(|(_, k)| *k > 0)
        .collect()
}

/// `dim V(τ)` by the Weyl dimension formula.
pub fn weyl_dimension(tau: &Partition) -> u64 {
    let p = tau.parts();
    let mut acc = BigRational::one();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let num = p[a] as i64 - p[b] as i64 + (b - a) as i64;
            acc *= BigRational::new(BigInt::from(num), BigInt::from((b - a) as i64));
        }
    }
    acc.to_integer().to_u64().expect("dimension fits")
}

/// `Σ_τ K_{τ,ν} K_{τ^T,λ^T}(t)`.
pub fn weyl_weight_graded_dim(lambda: &Partition, nu: &Composition) -> Result<TPoly> {
    if lambda.total() != nu.total() {
        return Err(Error::TotalMismatch(lambda.total(), nu.total()));
    }
    let lambda = align(lambda, nu.n())?;
    let lt = transpose(&lambda);
    let mut acc = TPoly::zero();
    for tau in enumerate_partitions(nu.n(), nu.total()) {
        if !dominance_leq(&tau, &lambda)? {
            continue;
        }
        let k = kostka_number(&tau, nu)?;
        if k > 0 {
            acc += &(&kostka_foulkes(&transpose(&tau), &lt)? * k as i64);
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CharacterEntry {
    pub nu: Composition,
    pub dim: TPoly,
}

/// Weight-space graded dimensions of `W(λ)` over all compositions.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CharacterTable {
    pub lambda: Partition,
    pub entries: Vec<CharacterEntry>,
}

impl CharacterTable {
    pub fn get(&self, nu: &Composition) -> Option<&TPoly> {
        self.entries.iter().find(|e| &e.nu == nu).map(|e| &e.dim)
    }

    /// Total dimension at `t = 1`.
    pub fn total_dim(&self) -> i64 {
        self.entries.iter().map(|e| e.dim.eval(1)).sum()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("nu,dim\n");
        for e in &self.entries {
            s.push_str(&format!("\"{}\",\"{}\"\n", e.nu, e.dim));
        }
        s
    }
}

/// Non-zero entries only, in lexicographic order of `ν`.
pub fn weyl_graded_character(lambda: &Partition) -> Result<CharacterTable> {
    let weights = enumerate_compositions(lambda.n(), lambda.total());
    let dims = par_map(&weights, |nu| weyl_weight_graded_dim(lambda, nu));
    let mut entries = Vec::new();
    for (nu, dim) in weights.into_iter().zip(dims) {
        let dim = dim?;
        if !dim.is_zero() {
            entries.push(CharacterEntry { nu, dim });
        }
    }
    Ok(CharacterTable {
        lambda: lambda.clone(),
        entries,
    })
}

/// `t^{d/2} W(t^{-1})`.
pub fn reflected_weyl_dim(lambda: &Partition, nu: &Composition) -> Result<TPoly> {
    let w = weyl_weight_graded_dim(lambda, nu)?;
    if w.is_zero() {
        return Ok(w);
    }
    let lambda = align(lambda, nu.n())?;
    Ok(w.reflect((degree_gap(&lambda, nu)? / 2) as i32))
}

/// Both coinvariant routes agree with the reflected Weyl weight dimension.
pub fn dual_reflection_check(lambda: &Partition, nu: &Composition) -> Result<bool> {
    let w = reflected_weyl_dim(lambda, nu)?;
    Ok(coinv_graded_dim_linear(lambda, nu)? == w && coinv_graded_dim_formula(lambda, nu)? == w)
}

/// `Π_j C(n, λ^T_j)`.
pub fn fusion_dim(lambda: &Partition) -> u64 {
    let n = lambda.n() as u64;
    transpose(lambda)
        .parts()
        .iter()
        .map(|&c| binomial(n, c as u64))
        .product()
}

/// `Σ_ν dim W_ν(λ)` at `t = 1` equals [`fusion_dim`].
pub fn fusion_dim_check(lambda: &Partition) -> Result<bool> {
    let table = weyl_graded_character(lambda)?;
    Ok(table.total_dim() == fusion_dim(lambda) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weight_dims() {
        let l = part(&[5, 0, 0]);
        let w = weyl_weight_graded_dim(&l, &Composition::from(&[3u32, 1, 1][..])).unwrap();
        assert_eq!(w, TPoly::from_coeffs(&[1, 2, 3, 4, 4, 3, 2, 1]));
        assert_eq!(
            weyl_weight_graded_dim(&l, &Composition::from(&[5u32, 0, 0][..])).unwrap(),
            TPoly::one()
        );
    }

    #[test]
    fn fusion() {
        assert_eq!(fusion_dim(&part(&[5, 0, 0])), 243);
        assert!(fusion_dim_check(&part(&[5, 0, 0])).unwrap());
        assert_eq!(fusion_dim(&part(&[2, 1])), 2);
        assert!(fusion_dim_check(&part(&[2, 1])).unwrap());
    }

    #[test]
    fn dimension_formula() {
        assert_eq!(weyl_dimension(&part(&[2, 1, 0])), 8);
        assert_eq!(weyl_dimension(&part(&[1, 0, 0, 0])), 4);
        let tau = part(&[3, 1, 0]);
        assert_eq!(
            irr_weight_multiplicities(&tau).values().sum::<u64>(),
            weyl_dimension(&tau)
        );
    }
}
