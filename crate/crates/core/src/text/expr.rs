//! Descriptor expressions.
//!
//! ```text
//! desc    := "(" ( "table" PATH | "group" factor+ | "semilattice" slspec
//!              | "product" desc desc | "adjoin-zero" desc | "adjoin-identity" desc
//!              | "taimanov" | "null" ) ")"
//! factor  := "(" ( "cyclic" INT | "prufer" PRIME | "integers" | "cyclic-tower" PRIME )
//!              [ "x" ( INT | "omega" ) ] ")"
//! slspec  := "chain-omega" | "antichain-omega-zero" | "(" "poset" PATH ")"
//! ```
//!
//! Paths may be double-quoted when they contain spaces or parentheses.

use std::fmt;
use std::path::Path;

use crate::descriptor::{
    is_prime, Descriptor, FactorKind, FiniteSemilattice, GroupFactor, GroupSpec, Multiplicity,
    SemilatticeSpec,
};
use crate::error::{Error, Result};
use crate::table::CayleyTable;

use super::table_format::read_table_file;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemilatticeExpr {
    Poset(String),
    ChainOmega,
    AntichainOmegaZero,
}

/// Parse tree of a descriptor expression; table paths are kept unresolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DescriptorExpr {
    Table(String),
    Group(GroupSpec),
    Semilattice(SemilatticeExpr),
    Product(Box<DescriptorExpr>, Box<DescriptorExpr>),
    AdjoinZero(Box<DescriptorExpr>),
    AdjoinIdentity(Box<DescriptorExpr>),
    Taimanov,
    Null,
}

impl DescriptorExpr {
    /// Builds the descriptor, loading tables through `load`.
    pub fn resolve(&self, load: &mut dyn FnMut(&str) -> Result<CayleyTable>) -> Result<Descriptor> {
        Ok(match self {
            DescriptorExpr::Table(path) => Descriptor::finite_table(load(path)?)?,
            DescriptorExpr::Group(g) => {
                g.check()?;
                Descriptor::Group(g.clone())
            }
            DescriptorExpr::Semilattice(SemilatticeExpr::Poset(path)) => Descriptor::Semilattice(
                SemilatticeSpec::FinitePoset(FiniteSemilattice::new(load(path)?)?),
            ),
            DescriptorExpr::Semilattice(SemilatticeExpr::ChainOmega) => {
                Descriptor::Semilattice(SemilatticeSpec::OmegaChain)
            }
            DescriptorExpr::Semilattice(SemilatticeExpr::AntichainOmegaZero) => {
                Descriptor::Semilattice(SemilatticeSpec::OmegaAntichainZero)
            }
            DescriptorExpr::Product(a, b) => {
                Descriptor::product(a.resolve(load)?, b.resolve(load)?)
            }
            DescriptorExpr::AdjoinZero(d) => Descriptor::adjoin_zero(d.resolve(load)?),
            DescriptorExpr::AdjoinIdentity(d) => Descriptor::adjoin_identity(d.resolve(load)?),
            DescriptorExpr::Taimanov => Descriptor::Taimanov,
            DescriptorExpr::Null => Descriptor::Null,
        })
    }
}

fn render_path(path: &str) -> String {
    if path.is_empty()
        || path
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | '"'))
    {
        format!("\"{path}\"")
    } else {
        path.to_string()
    }
}

impl fmt::Display for DescriptorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorExpr::Table(p) => write!(f, "(table {})", render_path(p)),
            DescriptorExpr::Group(g) => {
                write!(f, "(group")?;
                for factor in &g.factors {
                    write!(f, " {factor}")?;
                }
                write!(f, ")")
            }
            DescriptorExpr::Semilattice(SemilatticeExpr::Poset(p)) => {
                write!(f, "(semilattice (poset {}))", render_path(p))
            }
            DescriptorExpr::Semilattice(SemilatticeExpr::ChainOmega) => {
                write!(f, "(semilattice chain-omega)")
            }
            DescriptorExpr::Semilattice(SemilatticeExpr::AntichainOmegaZero) => {
                write!(f, "(semilattice antichain-omega-zero)")
            }
            DescriptorExpr::Product(a, b) => write!(f, "(product {a} {b})"),
            DescriptorExpr::AdjoinZero(d) => write!(f, "(adjoin-zero {d})"),
            DescriptorExpr::AdjoinIdentity(d) => write!(f, "(adjoin-identity {d})"),
            DescriptorExpr::Taimanov => write!(f, "(taimanov)"),
            DescriptorExpr::Null => write!(f, "(null)"),
        }
    }
}

/// Parses an expression and resolves table paths relative to `base_dir`.
pub fn parse_descriptor(text: &str, base_dir: &Path) -> Result<Descriptor> {
    parse_expr(text)?.resolve(&mut |p| read_table_file(&base_dir.join(p), true))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
    Quoted(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err_at(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |ch: char| {
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        };
        match c {
            '(' | ')' => {
                chars.next();
                bump(c);
                let tok = if c == '(' { Tok::Open } else { Tok::Close };
                out.push(Token {
                    tok,
                    line: l,
                    column: col,
                });
            }
            '"' => {
                chars.next();
                bump(c);
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => {
                            bump('"');
                            break;
                        }
                        Some(ch) => {
                            bump(ch);
                            s.push(ch);
                        }
                        None => return Err(err_at(l, col, "unterminated quoted path")),
                    }
                }
                out.push(Token {
                    tok: Tok::Quoted(s),
                    line: l,
                    column: col,
                });
            }
            c if c.is_whitespace() => {
                chars.next();
                bump(c);
            }
            _ => {
                let mut s = String::new();
                while let Some(&ch) = chars.peek() {
                    if ch.is_whitespace() || matches!(ch, '(' | ')' | '"') {
                        break;
                    }
                    chars.next();
                    bump(ch);
                    s.push(ch);
                }
                out.push(Token {
                    tok: Tok::Atom(s),
                    line: l,
                    column: col,
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.column))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err_at(l, c, message))
    }

    fn expect_open(&mut self) -> Result<()> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Open) => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => self.fail("expected '('"),
            None => self.fail("unexpected end of input, expected '('"),
        }
    }

    fn expect_close(&mut self, what: &str) -> Result<()> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Close) => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => self.fail(format!("too many arguments to {what}, expected ')'")),
            None => self.fail(format!(
                "unexpected end of input, expected ')' closing {what}"
            )),
        }
    }

    fn atom(&mut self, what: &str) -> Result<(String, usize, usize)> {
        match self.peek().cloned() {
            Some(Token {
                tok: Tok::Atom(s),
                line,
                column,
            }) => {
                self.pos += 1;
                Ok((s, line, column))
            }
            Some(_) => self.fail(format!("expected {what}")),
            None => self.fail(format!("unexpected end of input, expected {what}")),
        }
    }

    fn path(&mut self, what: &str) -> Result<String> {
        match self.peek().cloned() {
            Some(Token {
                tok: Tok::Atom(s) | Tok::Quoted(s),
                ..
            }) => {
                self.pos += 1;
                Ok(s)
            }
            Some(_) => self.fail(format!("expected a table path for {what}")),
            None => self.fail(format!(
                "unexpected end of input, expected a table path for {what}"
            )),
        }
    }

    fn number(&mut self, what: &str) -> Result<(u64, usize, usize)> {
        let (s, l, c) = self.atom(what)?;
        s.parse::<u64>()
            .map(|n| (n, l, c))
            .map_err(|_| err_at(l, c, format!("expected {what}, found {s:?}")))
    }

    fn prime(&mut self, ctor: &str) -> Result<u64> {
        let (p, l, c) = self.number("a prime")?;
        if is_prime(p) {
            Ok(p)
        } else {
            Err(err_at(l, c, format!("{ctor} parameter {p} is not prime")))
        }
    }

    fn desc(&mut self) -> Result<DescriptorExpr> {
        self.expect_open()?;
        let (name, l, c) = self.atom("a constructor name")?;
        let d = match name.as_str() {
            "table" => DescriptorExpr::Table(self.path("table")?),
            "group" => {
                let mut factors = Vec::new();
                while matches!(self.peek().map(|t| &t.tok), Some(Tok::Open)) {
                    factors.push(self.factor()?);
                }
                if factors.is_empty() {
                    return self.fail("group needs at least one factor");
                }
                DescriptorExpr::Group(GroupSpec::new(factors))
            }
            "semilattice" => DescriptorExpr::Semilattice(self.slspec()?),
            "product" => {
                let a = self.desc_arg("product")?;
                let b = self.desc_arg("product")?;
                DescriptorExpr::Product(Box::new(a), Box::new(b))
            }
            "adjoin-zero" => DescriptorExpr::AdjoinZero(Box::new(self.desc_arg("adjoin-zero")?)),
            "adjoin-identity" => {
                DescriptorExpr::AdjoinIdentity(Box::new(self.desc_arg("adjoin-identity")?))
            }
            "taimanov" => DescriptorExpr::Taimanov,
            "null" => DescriptorExpr::Null,
            other => return Err(err_at(l, c, format!("unknown constructor {other:?}"))),
        };
        self.expect_close(&name)?;
        Ok(d)
    }

    fn desc_arg(&mut self, ctor: &str) -> Result<DescriptorExpr> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Open) => self.desc(),
            Some(Tok::Close) | None => self.fail(format!("{ctor} is missing an argument")),
            Some(_) => self.fail(format!("{ctor} expects a parenthesized descriptor")),
        }
    }

    fn factor(&mut self) -> Result<GroupFactor> {
        self.expect_open()?;
        let (name, l, c) = self.atom("a group factor")?;
        let kind = match name.as_str() {
            "cyclic" => {
                let (n, nl, nc) = self.number("a cyclic order")?;
                if n == 0 {
                    return Err(err_at(nl, nc, "cyclic order must be at least 1"));
                }
                FactorKind::Cyclic(n)
            }
            "prufer" => FactorKind::Prufer(self.prime("prufer")?),
            "integers" => FactorKind::Integers,
            "cyclic-tower" => FactorKind::CyclicTower(self.prime("cyclic-tower")?),
            other => return Err(err_at(l, c, format!("unknown group factor {other:?}"))),
        };
        let mut multiplicity = Multiplicity::Finite(1);
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Atom(s)) if s == "x") {
            self.pos += 1;
            let (m, ml, mc) = self.atom("a multiplicity")?;
            multiplicity = if m == "omega" {
                Multiplicity::Omega
            } else {
                match m.parse::<u64>() {
                    Ok(k) if k >= 1 => Multiplicity::Finite(k),
                    _ => {
                        return Err(err_at(
                            ml,
                            mc,
                            format!("expected a positive multiplicity or omega, found {m:?}"),
                        ))
                    }
                }
            };
        }
        self.expect_close(&name)?;
        Ok(GroupFactor { kind, multiplicity })
    }

    fn slspec(&mut self) -> Result<SemilatticeExpr> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Atom(s)) => {
                let (l, c) = self.here();
                self.pos += 1;
                match s.as_str() {
                    "chain-omega" => Ok(SemilatticeExpr::ChainOmega),
                    "antichain-omega-zero" => Ok(SemilatticeExpr::AntichainOmegaZero),
                    other => Err(err_at(l, c, format!("unknown semilattice {other:?}"))),
                }
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let (name, l, c) = self.atom("poset")?;
                if name != "poset" {
                    return Err(err_at(l, c, format!("unknown semilattice {name:?}")));
                }
                let p = self.path("poset")?;
                self.expect_close("poset")?;
                Ok(SemilatticeExpr::Poset(p))
            }
            _ => self.fail("semilattice is missing its specification"),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<DescriptorExpr> {
    let tokens = tokenize(text)?;
    let end = text
        .lines()
        .enumerate()
        .last()
        .map_or((1, 1), |(i, l)| (i + 1, l.chars().count() + 1));
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
    };
    let d = p.desc()?;
    if p.pos < p.tokens.len() {
        return p.fail("trailing input after the expression");
    }
    Ok(d)
}
