//! Sparse multivariate polynomials with integer coefficients.
//!
//! Variables are `X_1..X_n`, stored 0-based. Degrees reported by
//! [`MPoly::half_degree`] count each variable once; the grading used elsewhere
//! in the crate doubles this.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Hard cap on the number of variables.
pub const MAX_VARS: usize = 16;

/// Exponent vector, packed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u8; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn from_exps(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = [0u8; MAX_VARS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = u8::try_from(e).expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn var(k: usize, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[k] = u8::try_from(e).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exp(&self, k: usize) -> u32 {
        self.0[k] as u32
    }

    #[inline]
    pub fn set(&mut self, k: usize, e: u32) {
        self.0[k] = u8::try_from(e).expect("exponent overflow");
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = [0u8; MAX_VARS];
        for (k, e) in m.iter_mut().enumerate() {
            *e = self.0[k]
                .checked_add(other.0[k])
                .expect("exponent overflow");
        }
        Monomial(m)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = [0u8; MAX_VARS];
        for (k, e) in m.iter_mut().enumerate() {
            *e = self.0[k].checked_sub(other.0[k])?;
        }
        Some(Monomial(m))
    }

    pub fn swap(&self, a: usize, b: usize) -> Monomial {
        let mut m = *self;
        m.0.swap(a, b);
        m
    }

    pub fn exps(&self, n: usize) -> Vec<u32> {
        self.0[..n].iter().map(|&e| e as u32).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.0[..last])
    }
}

/// Polynomial in `nvars` variables over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> MPoly {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> MPoly {
        MPoly::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> MPoly {
        MPoly::term(nvars, Monomial::ONE, c)
    }

    pub fn term(nvars: usize, m: Monomial, c: impl Into<BigInt>) -> MPoly {
        let mut p = MPoly::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `X_{k+1}` (0-based index `k`).
    pub fn var(nvars: usize, k: usize) -> MPoly {
        assert!(k < nvars);
        MPoly::term(nvars, Monomial::var(k, 1), 1)
    }

    pub fn var_pow(nvars: usize, k: usize, e: u32) -> MPoly {
        assert!(k < nvars);
        MPoly::term(nvars, Monomial::var(k, e), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// Same polynomial viewed in a ring with more (or equally many) variables.
    pub fn with_nvars(mut self, nvars: usize) -> MPoly {
        assert!(nvars <= MAX_VARS);
        if nvars < self.nvars {
            for m in self.terms.keys() {
                assert!(
                    m.0[nvars..].iter().all(|&e| e == 0),
                    "variable out of range"
                );
            }
        }
        self.nvars = nvars;
        self
    }

    /// Highest variable index actually used, plus one.
    pub fn support_vars(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.mul(mono), a * c))
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Half-degree if homogeneous; `None` for zero or inhomogeneous input.
    pub fn half_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::total);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn max_half_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total).max()
    }

    /// Homogeneous component of half-degree `d`.
    pub fn graded_piece(&self, d: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.total() == d)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Apply the transposition of variables `a` and `b`.
    pub fn swap_vars(&self, a: usize, b: usize) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.swap(a, b), c.clone()))
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Rename variables: variable `k` becomes `perm[k]`.
    pub fn rename(&self, perm: &[usize], nvars: usize) -> MPoly {
        let mut out = MPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = Monomial::ONE;
            for (k, &to) in perm.iter().enumerate() {
                let e = m.exp(k);
                if e > 0 {
                    t.set(to, t.exp(to) + e);
                }
            }
            out.add_term(t, c);
        }
        out
    }

    /// Divided difference `(f - s_{ab} f) / (X_a - X_b)`; exact, no division.
    pub fn divided_difference(&self, a: usize, b: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let (i, j) = (m.exp(a), m.exp(b));
            if i == j {
                continue;
            }
            let (hi, lo, sign) = if i > j { (i, j, 1) } else { (j, i, -1) };
            let c = if sign < 0 { -c } else { c.clone() };
            let mut base = *m;
            base.set(a, lo);
            base.set(b, lo);
            // X_a^i X_b^j with i>j: X_a^j X_b^j * sum_{s<i-j} X_a^s X_b^{i-j-1-s}
            for s in 0..(hi - lo) {
                let mut t = base;
                t.set(a, lo + s);
                t.set(b, lo + (hi - lo - 1 - s));
                out.add_term(t, &c);
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, x) in point.iter().enumerate().take(self.nvars) {
                let e = m.exp(k);
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Largest absolute coefficient (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    /// Renders in the expression grammar: `3*X1^2*X2 - X3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first reads more naturally.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| b.total().cmp(&a.total()).then(b.cmp(a)));
        for (idx, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for k in 0..self.nvars {
                match m.exp(k) {
                    0 => {}
                    1 => factors.push(format!("X{}", k + 1)),
                    e => factors.push(format!("X{}^{}", k + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

fn check_same_ring(a: &MPoly, b: &MPoly) -> usize {
    a.nvars.max(b.nvars)
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        self.nvars = check_same_ring(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        self.nvars = check_same_ring(self, rhs);
        for (m, c) in &rhs.terms {
            self.add_term(*m, &-c);
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(check_same_ring(self, rhs));
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl serde::Serialize for MPoly {
    /// List of `{"exps": [...], "coef": "..."}` in ascending monomial order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{SerializeSeq, SerializeStruct};

        struct Term<'a>(&'a [u8], &'a BigInt);
        impl serde::Serialize for Term<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut st = s.serialize_struct("Term", 2)?;
                st.serialize_field("exps", self.0)?;
                st.serialize_field("coef", &self.1.to_string())?;
                st.end()
            }
        }

        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&Term(&m.0[..self.nvars], c))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, k: usize) -> MPoly {
        MPoly::var(n, k)
    }

    #[test]
    fn arithmetic_basics() {
        let a = &x(2, 0) + &x(2, 1);
        let sq = &a * &a;
        assert_eq!(sq.to_string(), "X1^2 + 2*X1*X2 + X2^2");
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.half_degree(), Some(2));
    }

    #[test]
    fn divided_difference_matches_definition() {
        let f = &(&x(3, 0).pow(3) * &x(3, 1)) + &x(3, 2);
        let d = f.divided_difference(0, 1);
        let lhs = &d * &(&x(3, 0) - &x(3, 1));
        assert_eq!(lhs, &f - &f.swap_vars(0, 1));
    }

    #[test]
    fn display_negative_and_constant() {
        let p = &MPoly::constant(2, 3) - &x(2, 1).pow(2);
        assert_eq!(p.to_string(), "-X2^2 + 3");
        assert_eq!(MPoly::zero(1).to_string(), "0");
    }
}
