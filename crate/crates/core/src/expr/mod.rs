//! Text syntax for polynomials in `X` and `Y` with rational coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' factor) | ('/' rational))*
//! factor := '-' factor | base ('^' uint)?
//! base   := rational | 'X' | 'Y' | '(' expr ')'
//! rational := uint ('/' uint)?
//! ```
//!
//! Unary minus binds looser than `^`, so `-X^2` is `-(X^2)`.

mod format;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bipoly::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::ring::Rat;
use crate::upoly::QPoly;

pub use format::{format_circle, format_circle_by, format_poly, format_poly_by, format_upoly, Coefficient};

pub const MAX_EXPONENT: u32 = 64;
/// Bound on the total degree of any subexpression.
pub const MAX_DEGREE: usize = 256;
pub const MAX_DEPTH: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprTree {
    Lit(Rat),
    Var(Var),
    Add(Box<ExprTree>, Box<ExprTree>),
    Sub(Box<ExprTree>, Box<ExprTree>),
    Neg(Box<ExprTree>),
    Mul { lhs: Box<ExprTree>, rhs: Box<ExprTree>, at: usize },
    Pow { base: Box<ExprTree>, exp: u32, at: usize },
    /// Division by a nonzero rational literal.
    Div(Box<ExprTree>, Rat),
}

impl ExprTree {
    /// Expands the tree into a polynomial.
    pub fn eval(&self) -> Result<BiPoly<Rat>> {
        Ok(match self {
            ExprTree::Lit(r) => BiPoly::constant(r.clone()),
            ExprTree::Var(v) => BiPoly::var(*v),
            ExprTree::Add(a, b) => a.eval()?.add(&b.eval()?),
            ExprTree::Sub(a, b) => a.eval()?.sub(&b.eval()?),
            ExprTree::Neg(a) => a.eval()?.neg(),
            ExprTree::Mul { lhs, rhs, at } => {
                let (a, b) = (lhs.eval()?, rhs.eval()?);
                check_degree(degree(&a) + degree(&b), *at)?;
                a.mul(&b)
            }
            ExprTree::Pow { base, exp, at } => {
                let b = base.eval()?;
                check_degree(degree(&b) * *exp as usize, *at)?;
                b.pow(*exp)
            }
            ExprTree::Div(a, d) => a.eval()?.scale(&d.recip()),
        })
    }
}

fn degree(p: &BiPoly<Rat>) -> usize {
    p.total_degree().finite().unwrap_or(0)
}

fn check_degree(d: usize, at: usize) -> Result<()> {
    if d > MAX_DEGREE {
        return Err(perr(at, format!("degree {d} exceeds the limit {MAX_DEGREE}")));
    }
    Ok(())
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse_expr(text: &str) -> Result<ExprTree> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, depth: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(perr(p.pos, format!("unexpected {}", p.describe())));
    }
    Ok(e)
}

pub fn parse_poly(text: &str) -> Result<BiPoly<Rat>> {
    parse_expr(text)?.eval()
}

/// Parses a polynomial involving at most one variable, returning it with
/// that variable (`X` when constant).
pub fn parse_univariate(text: &str) -> Result<(QPoly, Var)> {
    let f = parse_poly(text)?;
    for v in [Var::X, Var::Y] {
        if let Some(u) = f.to_univariate(v) {
            return Ok((u, v));
        }
    }
    Err(Error::NotUnivariate("X or Y".into()))
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn describe(&self) -> String {
        match self.s.get(self.pos) {
            None => "end of input".into(),
            Some(c) if c.is_ascii_graphic() => format!("'{}'", *c as char),
            Some(c) => format!("byte 0x{c:02x}"),
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(perr(self.pos, format!("nesting deeper than {MAX_DEPTH}")));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<ExprTree> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = ExprTree::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = ExprTree::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprTree> {
        let mut lhs = self.factor()?;
        loop {
            self.skip_ws();
            let at = self.pos;
            if self.eat(b'*') {
                let rhs = self.factor()?;
                lhs = ExprTree::Mul { lhs: Box::new(lhs), rhs: Box::new(rhs), at };
            } else if self.eat(b'/') {
                self.skip_ws();
                let start = self.pos;
                if !matches!(self.s.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    return Err(perr(start, "denominator must be a rational literal"));
                }
                let d = self.rational()?;
                if d.is_zero() {
                    return Err(perr(start, "division by zero"));
                }
                lhs = ExprTree::Div(Box::new(lhs), d);
            } else {
                match self.peek() {
                    Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                        return Err(perr(self.pos, "expected an operator; multiplication must be explicit"));
                    }
                    _ => return Ok(lhs),
                }
            }
        }
    }

    fn factor(&mut self) -> Result<ExprTree> {
        self.enter()?;
        let out = if self.eat(b'-') {
            ExprTree::Neg(Box::new(self.factor()?))
        } else {
            let base = self.base()?;
            self.skip_ws();
            let at = self.pos;
            if self.eat(b'^') {
                self.skip_ws();
                let start = self.pos;
                let digits = self.digits().ok_or_else(|| perr(start, "expected a nonnegative integer exponent"))?;
                let exp = digits
                    .parse::<u32>()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| perr(start, format!("exponent exceeds {MAX_EXPONENT}")))?;
                ExprTree::Pow { base: Box::new(base), exp, at }
            } else {
                base
            }
        };
        self.depth -= 1;
        Ok(out)
    }

    fn base(&mut self) -> Result<ExprTree> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                Ok(ExprTree::Var(Var::X))
            }
            Some(b'Y') => {
                self.pos += 1;
                Ok(ExprTree::Var(Var::Y))
            }
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(perr(self.pos, format!("expected ')' to close the '(' at byte {open}, found {}", self.describe())));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(ExprTree::Lit(self.rational()?)),
            _ => Err(perr(self.pos, format!("expected a number, X, Y or '(', found {}", self.describe()))),
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        // ASCII digits are valid UTF-8
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    /// `uint ('/' uint)?`; the caller has checked that a digit follows.
    fn rational(&mut self) -> Result<Rat> {
        let n: BigInt = self.digits().expect("digit").parse().expect("digits");
        let save = self.pos;
        if self.eat(b'/') {
            self.skip_ws();
            let start = self.pos;
            if let Some(d) = self.digits() {
                let d: BigInt = d.parse().expect("digits");
                if d.is_zero() {
                    return Err(perr(start, "division by zero"));
                }
                return Ok(Rat::new(n, d));
            }
            // not a literal denominator: leave the '/' to the term level
            self.pos = save;
        }
        Ok(Rat::from_integer(n))
    }
}
