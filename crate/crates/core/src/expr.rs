//! Tokens and expression trees for polynomial text.
//!
//! ```text
//! expr    := ["+" | "-"] product (("+" | "-") product)*
//! product := factor ("*" factor)*
//! factor  := atom ("^" integer)?
//! atom    := integer | ident | "(" expr ")"
//! ```
//!
//! The tree keeps parentheses, so printing a parsed expression and parsing
//! it again yields the same tree.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

/// Split `src` into tokens. `#` starts a comment running to end of line.
pub fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Int(digits.parse().expect("digits")),
                line: l0,
                column: c0,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            column += i - start;
            out.push(Token {
                tok: Tok::Ident(ident),
                line: l0,
                column: c0,
            });
            continue;
        }
        if "+-*^(),;=[]/".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
            column += 1;
            i += 1;
            continue;
        }
        return Err(Error::Parse {
            line,
            column,
            message: format!("unexpected character `{c}`"),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<(Sign, Product)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub atom: Atom,
    pub exp: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Int(BigInt),
    Ident(String),
    Paren(Box<Expr>),
}

impl Expr {
    /// A bare identifier, if that is all this expression is.
    pub fn as_ident(&self) -> Option<&str> {
        match self.terms.as_slice() {
            [(Sign::Plus, p)] => match p.factors.as_slice() {
                [Factor {
                    atom: Atom::Ident(s),
                    exp: None,
                }] => Some(s),
                _ => None,
            },
            _ => None,
        }
    }

    /// A nonnegative integer literal, if that is all this expression is.
    pub fn as_int(&self) -> Option<&BigInt> {
        match self.terms.as_slice() {
            [(Sign::Plus, p)] => match p.factors.as_slice() {
                [Factor {
                    atom: Atom::Int(n),
                    exp: None,
                }] => Some(n),
                _ => None,
            },
            _ => None,
        }
    }

    /// All identifiers referenced.
    pub fn idents(&self) -> Vec<&str> {
        let mut out = Vec::new();
        for (_, p) in &self.terms {
            for f in &p.factors {
                match &f.atom {
                    Atom::Ident(s) => out.push(s.as_str()),
                    Atom::Paren(e) => out.extend(e.idents()),
                    Atom::Int(_) => {}
                }
            }
        }
        out
    }

    /// Evaluate in `ring`; identifiers that are not ring variables are
    /// resolved through `lookup`.
    pub fn eval(&self, ring: &Ring, lookup: &dyn Fn(&str) -> Option<Polynomial>) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(ring);
        for (sign, p) in &self.terms {
            let mut prod = Polynomial::one(ring);
            for f in &p.factors {
                let base = match &f.atom {
                    Atom::Int(n) => Polynomial::constant(ring, ring.field().from_bigint(n)),
                    Atom::Ident(s) => match ring.var_index(s) {
                        Some(i) => Polynomial::var(ring, i),
                        None => lookup(s)
                            .ok_or_else(|| Error::Precondition(format!("unbound identifier `{s}`")))?,
                    },
                    Atom::Paren(e) => e.eval(ring, lookup)?,
                };
                let v = match f.exp {
                    Some(e) => base.pow(e),
                    None => base,
                };
                prod = prod.try_mul(&v)?;
            }
            acc = match sign {
                Sign::Plus => acc.try_add(&prod)?,
                Sign::Minus => acc.try_sub(&prod)?,
            };
        }
        Ok(acc)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (sign, p)) in self.terms.iter().enumerate() {
            match (k, sign) {
                (0, Sign::Plus) => {}
                (0, Sign::Minus) => write!(f, "-")?,
                (_, Sign::Plus) => write!(f, " + ")?,
                (_, Sign::Minus) => write!(f, " - ")?,
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fac) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            match &fac.atom {
                Atom::Int(n) => write!(f, "{n}")?,
                Atom::Ident(s) => write!(f, "{s}")?,
                Atom::Paren(e) => write!(f, "({e})")?,
            }
            if let Some(e) = fac.exp {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Recursive-descent parser over a token slice.
pub struct ExprParser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        ExprParser { toks, pos: 0 }
    }

    pub fn at(toks: &'a [Token], pos: usize) -> Self {
        ExprParser { toks, pos }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    pub fn next(&mut self) -> &Token {
        let t = &self.toks[self.pos.min(self.toks.len() - 1)];
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, expected: &str) -> Error {
        let t = self.peek();
        Error::Parse {
            line: t.line,
            column: t.column,
            message: format!("expected {expected}, found {}", t.tok),
        }
    }

    pub fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => Err(self.error("identifier")),
        }
    }

    pub fn expect_int(&mut self) -> Result<BigInt> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.next();
                Ok(n)
            }
            _ => Err(self.error("integer")),
        }
    }

    pub fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut sign = Sign::Plus;
        if self.is_sym('-') {
            self.next();
            sign = Sign::Minus;
        } else if self.is_sym('+') {
            self.next();
        }
        terms.push((sign, self.product()?));
        loop {
            let sign = if self.is_sym('+') {
                Sign::Plus
            } else if self.is_sym('-') {
                Sign::Minus
            } else {
                break;
            };
            self.next();
            terms.push((sign, self.product()?));
        }
        Ok(Expr { terms })
    }

    fn product(&mut self) -> Result<Product> {
        let mut factors = vec![self.factor()?];
        while self.is_sym('*') {
            self.next();
            factors.push(self.factor()?);
        }
        Ok(Product { factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        let atom = match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.next();
                Atom::Int(n)
            }
            Tok::Ident(s) => {
                self.next();
                Atom::Ident(s)
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Atom::Paren(Box::new(e))
            }
            _ => return Err(self.error("integer, identifier or `(`")),
        };
        let exp = if self.is_sym('^') {
            self.next();
            let n = self.expect_int()?;
            Some(u32::try_from(&n).map_err(|_| self.error("small exponent"))?)
        } else {
            None
        };
        Ok(Factor { atom, exp })
    }
}

/// Parse a standalone polynomial over `ring`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let toks = tokenize(src)?;
    let mut p = ExprParser::new(&toks);
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error("end of input"));
    }
    e.eval(ring, &|_| None)
}
