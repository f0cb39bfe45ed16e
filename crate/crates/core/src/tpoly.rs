//! Univariate (Laurent) polynomials in `t` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Exponent `r` stands for the graded piece of degree `2r`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: BTreeMap<i32, i64>,
}

impl TPoly {
    pub fn zero() -> TPoly {
        TPoly::default()
    }

    pub fn one() -> TPoly {
        TPoly::monomial(0, 1)
    }

    pub fn monomial(e: i32, c: i64) -> TPoly {
        let mut p = TPoly::zero();
        p.add_term(e, c);
        p
    }

    /// From coefficients of `t^0, t^1, ...`.
    pub fn from_coeffs(cs: &[i64]) -> TPoly {
        let mut p = TPoly::zero();
        for (e, &c) in cs.iter().enumerate() {
            p.add_term(e as i32, c);
        }
        p
    }

    pub fn from_pairs(pairs: &[(i32, i64)]) -> TPoly {
        let mut p = TPoly::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot = slot.checked_add(c).expect("TPoly coefficient overflow");
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> Vec<(i32, i64)> {
        self.coeffs.iter().map(|(&e, &c)| (e, c)).collect()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        assert!(t != 0 || self.is_polynomial());
        let mut acc = 0i64;
        for (&e, &c) in &self.coeffs {
            let v = if e >= 0 {
                t.checked_pow(e as u32).expect("overflow") * c
            } else {
                // Only t = ±1 stays integral.
                assert!(t == 1 || t == -1, "Laurent evaluation off the unit circle");
                t.pow(e.unsigned_abs()) * c
            };
            acc += v;
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i32) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// `t -> t^{-1}`.
    pub fn invert(&self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// `t^d * p(t^{-1})`.
    pub fn reflect(&self, d: i32) -> TPoly {
        self.invert().shift(d)
    }

    pub fn is_palindromic(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self.reflect(lo + hi) == *self,
            _ => true,
        }
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let a = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for TPoly {
    /// `[[exponent, coefficient], ...]`, ascending.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|(&e, &c)| (e, c)))
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        for (&e, &c) in &rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &rhs.coeffs {
                out.add_term(
                    e1 + e2,
                    c1.checked_mul(c2).expect("TPoly coefficient overflow"),
                );
            }
        }
        out
    }
}

impl Mul<i64> for &TPoly {
    type Output = TPoly;
    fn mul(self, k: i64) -> TPoly {
        let mut out = TPoly::zero();
        for (&e, &c) in &self.coeffs {
            out.add_term(e, c * k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_json() {
        let p = TPoly::from_coeffs(&[1, 2, 4, 3, 2]);
        assert_eq!(p.to_string(), "2t^4 + 3t^3 + 4t^2 + 2t + 1");
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            "[[0,1],[1,2],[2,4],[3,3],[4,2]]"
        );
        assert_eq!(TPoly::zero().to_string(), "0");
    }

    #[test]
    fn reflect_laurent() {
        let p = TPoly::from_pairs(&[(-2, 1), (-1, 3)]);
        assert_eq!(p.shift(2), TPoly::from_coeffs(&[1, 3]));
        assert_eq!(
            TPoly::from_coeffs(&[1, 3]).reflect(1),
            TPoly::from_coeffs(&[3, 1])
        );
        assert_eq!(p.eval(1), 4);
    }
}
