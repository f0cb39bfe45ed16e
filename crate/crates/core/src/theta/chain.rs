//! Tensor products of the bimodules `P_{ν±α_i, ν}` along a word in E and F.
//!
//! A chain starts at the weight `ν⁽⁰⁾` on the right and applies strands
//! `s_0, s_1, ...` in order; strand `k` goes from `ν⁽ᵏ⁾` to `ν⁽ᵏ⁺¹⁾`. Each
//! strand's bimodule is a polynomial ring whose composition refines both
//! neighbours by splitting off one variable, the strand's separated variable.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{add_root, Composition, Sign};
use crate::poly::{MPoly, Monomial};
use crate::sympoly::{free_decompose, locate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// upward strand, `E_i`
    E,
    /// downward strand, `F_i`
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub dir: Dir,
    pub i: usize,
}

impl Strand {
    pub fn e(i: usize) -> Strand {
        Strand { dir: Dir::E, i }
    }

    pub fn f(i: usize) -> Strand {
        Strand { dir: Dir::F, i }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.dir, self.i)
    }
}

/// Ring data of one strand's bimodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub strand: Strand,
    /// Composition of the bimodule ring.
    pub fine: Composition,
    /// 0-based separated variable.
    pub x: usize,
    /// Rank over the left (target) ring.
    pub left_rank: usize,
    /// Rank over the right (source) ring.
    pub right_rank: usize,
}

impl Factor {
    /// Bimodule of `strand` acting on `nu`, or `None` if the target weight is empty.
    pub fn new(strand: Strand, nu: &Composition) -> Option<(Factor, Composition)> {
        let i = strand.i;
        if i == 0 || i >= nu.n() {
            return None;
        }
        let target = match strand.dir {
            Dir::E => add_root(nu, i, Sign::Plus).ok()??,
            Dir::F => add_root(nu, i, Sign::Minus).ok()??,
        };
        let mut parts = nu.parts().to_vec();
        let x = match strand.dir {
            Dir::E => {
                parts[i] -= 1;
                parts.insert(i, 1);
                nu.k(i)
            }
            Dir::F => {
                parts[i - 1] -= 1;
                parts.insert(i, 1);
                nu.k(i) - 1
            }
        };
        let fine = Composition::new(parts);
        let left_rank = locate(&target, x).ok()?.1.len();
        let right_rank = locate(nu, x).ok()?.1.len();
        Some((
            Factor {
                strand,
                fine,
                x,
                left_rank,
                right_rank,
            },
            target,
        ))
    }
}

/// A composable word of strands starting at `weights[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub weights: Vec<Composition>,
    pub factors: Vec<Factor>,
}

impl Chain {
    /// `None` when some intermediate weight is empty.
    pub fn new(source: &Composition, strands: &[Strand]) -> Option<Chain> {
        let mut weights = vec![source.clone()];
        let mut factors = Vec::new();
        for &s in strands {
            let (f, next) = Factor::new(s, weights.last().unwrap())?;
            factors.push(f);
            weights.push(next);
        }
        Some(Chain { weights, factors })
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn source(&self) -> &Composition {
        &self.weights[0]
    }

    pub fn target(&self) -> &Composition {
        self.weights.last().unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.source().total() as usize
    }

    pub fn strands(&self) -> Vec<Strand> {
        self.factors.iter().map(|f| f.strand).collect()
    }

    /// Sum over strands of the bimodule grading shifts: `ν_i` for `E_i` and
    /// `ν_{i+1}` for `F_i` at source weight `ν`.
    pub fn shift(&self) -> i64 {
        self.factors
            .iter()
            .zip(&self.weights)
            .map(|(f, nu)| match f.strand.dir {
                Dir::E => nu.part(f.strand.i) as i64,
                Dir::F => nu.part(f.strand.i + 1) as i64,
            })
            .sum()
    }
}

/// An element of the tensor product of a chain's bimodules, in normal form:
/// `Σ c · x_{L-1}^{a_{L-1}} ⊗ ... ⊗ x_0^{a_0}` with `a_k` below the left rank
/// of factor `k` and `c` in the ring of the chain's target weight.
#[derive(Clone, PartialEq, Eq)]
pub struct Elem {
    pub chain: Chain,
    /// exponent vector (index = strand position) -> left coefficient
    terms: BTreeMap<Vec<u32>, MPoly>,
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Elem[{:?}; {:?}] {{",
            self.chain.source(),
            self.chain.strands()
        )?;
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, " ({c}) x^{e:?}")?;
        }
        write!(f, " }}")
    }
}

impl Elem {
    pub fn zero(chain: &Chain) -> Elem {
        Elem {
            chain: chain.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The element `c · 1 ⊗ ... ⊗ 1`, for `c` in the target ring.
    pub fn scalar(chain: &Chain, c: MPoly) -> Elem {
        let mut e = Elem::zero(chain);
        e.add(vec![0; chain.len()], &c);
        e
    }

    pub fn one(chain: &Chain) -> Elem {
        Elem::scalar(chain, MPoly::one(chain.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &MPoly)> {
        self.terms.iter()
    }

    /// For an empty chain: the underlying polynomial.
    pub fn as_poly(&self) -> MPoly {
        assert!(self.chain.is_empty());
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.chain.nvars()))
    }

    fn add(&mut self, exps: Vec<u32>, c: &MPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Elem) {
        assert_eq!(
            self.chain, other.chain,
            "adding elements of different chains"
        );
        for (e, c) in &other.terms {
            self.add(e.clone(), c);
        }
    }

    pub fn scale(&self, k: i64) -> Elem {
        let k = BigInt::from(k);
        let mut out = Elem::zero(&self.chain);
        for (e, c) in &self.terms {
            out.add(e.clone(), &c.scale(&k));
        }
        out
    }

    pub fn sub(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        out.add_assign(&other.scale(-1));
        out
    }

    /// Multiply on the left by `c` in the target ring.
    pub fn mul_left(&self, c: &MPoly) -> Elem {
        let mut out = Elem::zero(&self.chain);
        for (e, a) in &self.terms {
            out.add(e.clone(), &(a * c));
        }
        out
    }

    /// Multiply factor `t` by `r` (a polynomial in that factor's ring) and
    /// restore normal form by pushing coefficients leftward.
    pub fn mul_factor(&self, t: usize, r: &MPoly) -> Elem {
        let mut out = Elem::zero(&self.chain);
        for (exps, c) in &self.terms {
            let f = &self.chain.factors[t];
            let p = r.mul_monomial(&Monomial::var(f.x, exps[t]), &BigInt::one());
            self.push(t, &p, exps.clone(), c, &mut out);
        }
        out
    }

    fn push(&self, t: usize, p: &MPoly, mut exps: Vec<u32>, c: &MPoly, out: &mut Elem) {
        let f = &self.chain.factors[t];
        let left = &self.chain.weights[t + 1];
        let qs = free_decompose(p, f.x, left, f.left_rank)
            .unwrap_or_else(|e| panic!("factor {t} of {:?}: {e}", self.chain.strands()));
        for (m, q) in qs.into_iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            exps[t] = m as u32;
            if t + 1 == self.chain.len() || q.half_degree() == Some(0) {
                // constants commute past the remaining factors
                out.add(exps.clone(), &(c * &q));
            } else {
                let g = &self.chain.factors[t + 1];
                let p2 = q.mul_monomial(&Monomial::var(g.x, exps[t + 1]), &BigInt::one());
                self.push(t + 1, &p2, exps.clone(), c, out);
            }
        }
    }

    /// Right multiplication by an element of the source ring.
    pub fn mul_right(&self, q: &MPoly) -> Elem {
        if self.chain.is_empty() {
            return self.mul_left(q);
        }
        self.mul_factor(0, q)
    }

    /// `c · f_{L-1} ⊗ ... ⊗ f_0` for arbitrary factor polynomials.
    pub fn from_pure(chain: &Chain, c: &MPoly, factors: &[MPoly]) -> Elem {
        assert_eq!(factors.len(), chain.len());
        let mut e = Elem::scalar(chain, c.clone());
        for (t, f) in factors.iter().enumerate() {
            if f.is_zero() {
                return Elem::zero(chain);
            }
            if f.half_degree() == Some(0) && f.len() == 1 {
                e = e.mul_left(f);
            } else {
                e = e.mul_factor(t, f);
            }
        }
        e
    }

    /// Expand back into pure tensors: `(c, [x_k^{a_k}])` per term.
    pub fn pure_terms(&self) -> Vec<(MPoly, Vec<MPoly>)> {
        let n = self.chain.nvars();
        self.terms
            .iter()
            .map(|(exps, c)| {
                let fs = exps
                    .iter()
                    .zip(&self.chain.factors)
                    .map(|(&a, f)| MPoly::var_pow(n, f.x, a))
                    .collect();
                (c.clone(), fs)
            })
            .collect()
    }

    /// Half-degree if homogeneous (coefficient degree plus exponents).
    pub fn half_degree(&self) -> Option<u32> {
        let mut d = None;
        for (e, c) in &self.terms {
            let here = c.half_degree()? + e.iter().sum::<u32>();
            match d {
                None => d = Some(here),
                Some(prev) if prev != here => return None,
                _ => {}
            }
        }
        d
    }

    /// Linear extension of a map given on pure tensors.
    pub fn map_pure<F>(&self, target: &Chain, mut f: F) -> Elem
    where
        F: FnMut(&[MPoly]) -> Vec<(MPoly, Vec<MPoly>)>,
    {
        let mut out = Elem::zero(target);
        for (c, fs) in self.pure_terms() {
            for (c2, gs) in f(&fs) {
                let piece = Elem::from_pure(target, &(&c * &c2), &gs);
                out.add_assign(&piece);
            }
        }
        out
    }
}
