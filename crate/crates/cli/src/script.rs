//! Script syntax: a ring declaration followed by bindings and commands.
//!
//! ```text
//! script    := ring_decl (binding | command)*
//! ring_decl := "ring" field "[" ident ("," ident)* "]" ("order" ("grevlex" | "lex"))? ";"
//! field     := "QQ" | "ZZ/" integer
//! binding   := ("ideal" | "poly") ident "=" arg ("," arg)* ";"
//! command   := call ";"
//! call      := ident "(" (arg ("," arg)*)? ")"
//! arg       := call | expr
//! ```

use std::fmt;

use syzygy_core::expr::{tokenize, Expr, ExprParser, Tok, Token};
use syzygy_core::{FieldSpec, MonomialOrder};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderDecl {
    GrevLex,
    Lex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDecl {
    pub field: FieldDecl,
    pub vars: Vec<String>,
    pub order: Option<OrderDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    Call(Call),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Call {
    pub name: String,
    pub args: Vec<Arg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Ideal,
    Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Bind { kind: Kind, name: String, values: Vec<Arg> },
    Command(Call),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub ring: RingDecl,
    pub items: Vec<Item>,
}

/// Name and accepted argument counts of every call form. `None` means
/// unbounded.
pub const CALLS: &[(&str, usize, Option<usize>)] = &[
    ("ideal", 1, None),
    ("gb", 1, Some(1)),
    ("nf", 2, Some(2)),
    ("sum", 2, None),
    ("product", 2, None),
    ("power", 2, Some(2)),
    ("intersect", 2, None),
    ("colon", 2, Some(2)),
    ("saturate", 2, Some(2)),
    ("eliminate", 2, Some(2)),
    ("dim", 1, Some(1)),
    ("codim", 1, Some(1)),
    ("mult", 1, Some(1)),
    ("hilbert", 1, Some(1)),
    ("regseq", 1, None),
    ("resolve", 1, Some(1)),
    ("betti", 1, Some(1)),
    ("pd", 1, Some(1)),
    ("minors", 3, Some(3)),
    ("link", 1, None),
    ("unmixed", 1, Some(1)),
    ("isunmixed", 1, Some(1)),
    ("verify_paper", 0, Some(1)),
];

impl FieldDecl {
    pub fn spec(&self) -> syzygy_core::Result<FieldSpec> {
        match self {
            FieldDecl::Rationals => Ok(FieldSpec::Rationals),
            FieldDecl::Prime(p) => FieldSpec::prime(*p),
        }
    }
}

impl From<FieldSpec> for FieldDecl {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldDecl::Rationals,
            FieldSpec::Prime(p) => FieldDecl::Prime(p as u64),
        }
    }
}

impl OrderDecl {
    pub fn order(&self) -> MonomialOrder {
        match self {
            OrderDecl::GrevLex => MonomialOrder::GrevLex,
            OrderDecl::Lex => MonomialOrder::Lex,
        }
    }
}

/// Parses a `--field` style value: `QQ` or `ZZ/p`.
pub fn parse_field(s: &str) -> Result<FieldDecl> {
    let s = s.trim();
    if s == "QQ" {
        return Ok(FieldDecl::Rationals);
    }
    s.strip_prefix("ZZ/")
        .and_then(|p| p.parse().ok())
        .map(FieldDecl::Prime)
        .ok_or_else(|| CliError::Usage(format!("unknown field `{s}`, expected QQ or ZZ/p")))
}

pub fn parse_order(s: &str) -> Result<OrderDecl> {
    match s.trim() {
        "grevlex" => Ok(OrderDecl::GrevLex),
        "lex" => Ok(OrderDecl::Lex),
        other => Err(CliError::Usage(format!("unknown order `{other}`, expected grevlex or lex"))),
    }
}

struct Parser<'a> {
    toks: &'a [Token],
    p: ExprParser<'a>,
}

impl<'a> Parser<'a> {
    fn lookahead(&self, k: usize) -> &Tok {
        let i = (self.p.position() + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match &self.p.peek().tok {
            Tok::Ident(s) if s == word => {
                self.p.next();
                Ok(())
            }
            _ => Err(self.p.error(&format!("`{word}`")).into()),
        }
    }

    fn ring_decl(&mut self) -> Result<RingDecl> {
        self.keyword("ring")?;
        let field = match self.p.peek().tok.clone() {
            Tok::Ident(s) if s == "QQ" => {
                self.p.next();
                FieldDecl::Rationals
            }
            Tok::Ident(s) if s == "ZZ" => {
                self.p.next();
                self.p.expect_sym('/')?;
                let n = self.p.expect_int()?;
                FieldDecl::Prime(u64::try_from(&n).map_err(|_| self.p.error("a prime below 2^31"))?)
            }
            _ => return Err(self.p.error("`QQ` or `ZZ`").into()),
        };
        self.p.expect_sym('[')?;
        let mut vars = vec![self.p.expect_ident()?];
        while self.p.is_sym(',') {
            self.p.next();
            vars.push(self.p.expect_ident()?);
        }
        self.p.expect_sym(']')?;
        let order = if matches!(&self.p.peek().tok, Tok::Ident(s) if s == "order") {
            self.p.next();
            let order = match &self.p.peek().tok {
                Tok::Ident(s) if s == "grevlex" => OrderDecl::GrevLex,
                Tok::Ident(s) if s == "lex" => OrderDecl::Lex,
                _ => return Err(self.p.error("`grevlex` or `lex`").into()),
            };
            self.p.next();
            Some(order)
        } else {
            None
        };
        self.p.expect_sym(';')?;
        Ok(RingDecl { field, vars, order })
    }

    fn arg(&mut self) -> Result<Arg> {
        if matches!(self.lookahead(0), Tok::Ident(_)) && *self.lookahead(1) == Tok::Sym('(') {
            Ok(Arg::Call(self.call()?))
        } else {
            Ok(Arg::Expr(self.p.expr()?))
        }
    }

    fn args(&mut self, close: char) -> Result<Vec<Arg>> {
        let mut out = Vec::new();
        if self.p.is_sym(close) {
            return Ok(out);
        }
        out.push(self.arg()?);
        while self.p.is_sym(',') {
            self.p.next();
            out.push(self.arg()?);
        }
        Ok(out)
    }

    fn call(&mut self) -> Result<Call> {
        let at = self.p.peek().clone();
        let name = self.p.expect_ident()?;
        let Some(&(_, lo, hi)) = CALLS.iter().find(|(n, _, _)| *n == name) else {
            return Err(CliError::Syntax {
                line: at.line,
                column: at.column,
                message: format!("unknown command `{name}`"),
            });
        };
        self.p.expect_sym('(')?;
        let args = self.args(')')?;
        self.p.expect_sym(')')?;
        if args.len() < lo || hi.is_some_and(|hi| args.len() > hi) {
            let want = match hi {
                Some(hi) if hi == lo => format!("{lo}"),
                Some(hi) => format!("{lo} to {hi}"),
                None => format!("at least {lo}"),
            };
            return Err(CliError::Syntax {
                line: at.line,
                column: at.column,
                message: format!("`{name}` takes {want} arguments, got {}", args.len()),
            });
        }
        Ok(Call { name, args })
    }

    fn item(&mut self) -> Result<Item> {
        let kind = match self.lookahead(0) {
            Tok::Ident(s) if s == "ideal" && *self.lookahead(1) != Tok::Sym('(') => Some(Kind::Ideal),
            Tok::Ident(s) if s == "poly" => Some(Kind::Poly),
            _ => None,
        };
        let item = match kind {
            Some(kind) => {
                self.p.next();
                let at = self.p.peek().clone();
                let name = self.p.expect_ident()?;
                self.p.expect_sym('=')?;
                let values = self.args(';')?;
                if values.is_empty() || (kind == Kind::Poly && values.len() != 1) {
                    return Err(CliError::Syntax {
                        line: at.line,
                        column: at.column,
                        message: format!("binding `{name}` needs {}", if kind == Kind::Poly { "exactly one value" } else { "a value" }),
                    });
                }
                Item::Bind { kind, name, values }
            }
            None => Item::Command(self.call()?),
        };
        self.p.expect_sym(';')?;
        Ok(item)
    }
}

pub fn parse_script(src: &str) -> Result<Script> {
    let toks = tokenize(src)?;
    let mut parser = Parser { toks: &toks, p: ExprParser::new(&toks) };
    let ring = parser.ring_decl()?;
    let mut items = Vec::new();
    while parser.p.peek().tok != Tok::Eof {
        items.push(parser.item()?);
    }
    Ok(Script { ring, items })
}

impl fmt::Display for FieldDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDecl::Rationals => write!(f, "QQ"),
            FieldDecl::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl fmt::Display for OrderDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderDecl::GrevLex => "grevlex",
            OrderDecl::Lex => "lex",
        })
    }
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}[{}]", self.field, self.vars.join(","))?;
        if let Some(o) = self.order {
            write!(f, " order {o}")?;
        }
        write!(f, ";")
    }
}

fn join(args: &[Arg]) -> String {
    args.iter().map(Arg::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Expr(e) => write!(f, "{e}"),
            Arg::Call(c) => write!(f, "{c}"),
        }
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, join(&self.args))
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Bind { kind, name, values } => {
                let kw = match kind {
                    Kind::Ideal => "ideal",
                    Kind::Poly => "poly",
                };
                write!(f, "{kw} {name} = {};", join(values))
            }
            Item::Command(c) => write!(f, "{c};"),
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}
