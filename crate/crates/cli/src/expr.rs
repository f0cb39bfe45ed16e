//! Polynomial expressions over `X(k)`, `e(r,i)`, `h(r,i)`, `p(r,i)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | X(k) | Xk | e(r,i) | h(r,i) | p(r,i) | '(' expr ')'
//! ```

use polrep::sympoly::{generator, Kind};
use polrep::{BlockSymPoly, Composition, Error, MPoly, Result};

/// Largest total degree an intermediate result may reach.
const MAX_DEGREE: u32 = u8::MAX as u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(usize),
    Sym { kind: Kind, r: u32, block: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(err(
                self.pos,
                format!("expected '{}', found '{}'", c as char, x as char),
            )),
            None => Err(err(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn integer(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v = text
            .parse::<u64>()
            .map_err(|_| err(start, "integer too large"))?;
        Ok((start, v))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        if self.peek() == Some(b'-') {
            return Err(err(self.pos, "exponents must be non-negative integers"));
        }
        let (at, e) = self.integer()?;
        let e = u32::try_from(e)
            .ok()
            .filter(|&e| e <= MAX_DEGREE)
            .ok_or_else(|| err(at, "exponent too large"))?;
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = match self.peek() {
            None => return Err(err(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        match self.src[at] {
            b'0'..=b'9' => {
                let (at, v) = self.integer()?;
                let v = i64::try_from(v).map_err(|_| err(at, "integer too large"))?;
                Ok(Expr::Int(v))
            }
            b'(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            b'X' => {
                self.pos += 1;
                // `X(k)` or the shorthand `Xk`
                let k = if self.src.get(self.pos) == Some(&b'(') {
                    self.pos += 1;
                    let (_, k) = self.integer()?;
                    self.expect(b')')?;
                    k
                } else if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.integer()?.1
                } else {
                    return Err(err(self.pos, "expected '(' or a digit after X"));
                };
                if k == 0 {
                    return Err(err(at, "variables are numbered from 1"));
                }
                Ok(Expr::Var(k as usize))
            }
            c @ (b'e' | b'h' | b'p') => {
                self.pos += 1;
                let kind = match c {
                    b'e' => Kind::E,
                    b'h' => Kind::H,
                    _ => Kind::P,
                };
                self.expect(b'(')?;
                let (rat, r) = self.integer()?;
                let r = u32::try_from(r)
                    .ok()
                    .filter(|&r| r <= MAX_DEGREE)
                    .ok_or_else(|| err(rat, "degree too large"))?;
                self.expect(b',')?;
                let (_, block) = self.integer()?;
                self.expect(b')')?;
                Ok(Expr::Sym {
                    kind,
                    r,
                    block: block as usize,
                })
            }
            c => Err(err(at, format!("unexpected '{}'", c as char))),
        }
    }
}

/// Parse `text` into a syntax tree, without checking indices.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(err(p.pos, format!("unexpected '{}'", c as char)));
    }
    Ok(e)
}

fn degree(p: &MPoly) -> u32 {
    p.max_half_degree().unwrap_or(0)
}

fn too_big(lhs: u32, rhs: u32) -> Result<()> {
    if lhs + rhs > MAX_DEGREE {
        return Err(err(0, format!("degree exceeds {MAX_DEGREE}")));
    }
    Ok(())
}

/// Expand a tree in `ℤ[X_1, ..., X_N]` with `N = |ν|`.
pub fn eval(e: &Expr, nu: &Composition) -> Result<MPoly> {
    let n = nu.total() as usize;
    Ok(match e {
        Expr::Int(v) => MPoly::constant(n, *v),
        Expr::Var(k) => {
            if *k > n {
                return Err(Error::IndexOutOfRange { index: *k, max: n });
            }
            MPoly::var(n, k - 1)
        }
        Expr::Sym { kind, r, block } => generator(*kind, *r as i64, nu, *block)?.poly,
        Expr::Neg(a) => -&eval(a, nu)?,
        Expr::Add(a, b) => &eval(a, nu)? + &eval(b, nu)?,
        Expr::Sub(a, b) => &eval(a, nu)? - &eval(b, nu)?,
        Expr::Mul(a, b) => {
            let (a, b) = (eval(a, nu)?, eval(b, nu)?);
            too_big(degree(&a), degree(&b))?;
            &a * &b
        }
        Expr::Pow(a, k) => {
            let a = eval(a, nu)?;
            if degree(&a).saturating_mul(*k) > MAX_DEGREE {
                return Err(err(0, format!("degree exceeds {MAX_DEGREE}")));
            }
            a.pow(*k)
        }
    })
}

/// Parse and expand, then check invariance under the blocks of `ν`.
pub fn parse_poly(text: &str, nu: &Composition) -> Result<BlockSymPoly> {
    let tree = parse_expr(text)?;
    BlockSymPoly::new(eval(&tree, nu)?, nu.clone())
}

/// Print `p` in the input grammar, with variables as `X(k)`.
pub fn render(p: &MPoly) -> String {
    let plain = p.to_string();
    let mut out = String::with_capacity(plain.len() + 8);
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == 'X' {
            out.push('(');
            while let Some(d) = chars.next_if(char::is_ascii_digit) {
                out.push(d);
            }
            out.push(')');
        }
    }
    out
}
