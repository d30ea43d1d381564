//! The line-oriented `.q` problem-file format.
//!
//! ```text
//! # comments run to the end of the line
//! vertices v1 v2
//! arrow a : v1 -> v1
//! arrow b : v1 -> v2
//! order lenllex
//! poly f = a*b - 2/3*a^2*b
//! poly g = b
//! ideal I side=twosided : f, g
//! ```
//!
//! Declaration order of vertices and arrows sets their precedence. A term is
//! an optional rational coefficient followed by `*`-separated factors: arrow
//! names, vertex literals `[v]`, or powers `name^k`. A bare coefficient means
//! that multiple of the identity, and `0` is the zero polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{Polynomial, Scalar};
use crate::order::{OrderKind, PathOrder};
use crate::quiver::{Path, Quiver};
use crate::rewrite::Side;

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A named generator set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDecl {
    pub name: String,
    pub side: Side,
    pub generators: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub quiver: Quiver,
    pub order: PathOrder,
    polys: Vec<(String, Polynomial)>,
    ideals: Vec<IdealDecl>,
}

impl ProblemFile {
    pub fn poly(&self, name: &str) -> Option<&Polynomial> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn ideal(&self, name: &str) -> Option<&IdealDecl> {
        self.ideals.iter().find(|d| d.name == name)
    }

    pub fn polys(&self) -> impl Iterator<Item = (&str, &Polynomial)> {
        self.polys.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn ideals(&self) -> &[IdealDecl] {
        &self.ideals
    }

    /// Parses a polynomial expression against this file's quiver.
    pub fn parse_expr(&self, text: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(&self.quiver, text)
    }

    /// Canonical text of `p` under the file's order.
    pub fn format(&self, p: &Polynomial) -> String {
        p.format(&self.quiver, &self.order)
    }
}

/// Parses a whole problem file. The order defaults to `lenllex`.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut file = ProblemFile {
        quiver: Quiver::empty(),
        order: PathOrder::default(),
        polys: Vec::new(),
        ideals: Vec::new(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut lx = Lexer::new(body, idx + 1);
        let Some(head) = lx.peek() else { continue };
        let Tok::Ident(keyword) = head.tok.clone() else {
            return Err(lx.error_at(&head, "expected a declaration keyword"));
        };
        lx.next();
        match keyword.as_str() {
            "vertices" => {
                while let Some(t) = lx.next() {
                    let Tok::Ident(name) = t.tok.clone() else {
                        return Err(lx.error_at(&t, "expected a vertex name"));
                    };
                    file.quiver
                        .add_vertex(&name)
                        .map_err(|e| lx.error_at(&t, e.to_string()))?;
                }
            }
            "arrow" => {
                let (name, at) = lx.ident("an arrow name")?;
                lx.expect(&Tok::Colon)?;
                let (src, src_at) = lx.ident("a source vertex")?;
                lx.expect(&Tok::Arrow)?;
                let (dst, dst_at) = lx.ident("a target vertex")?;
                lx.end()?;
                let source = file
                    .quiver
                    .vertex(&src)
                    .ok_or_else(|| lx.error_at(&src_at, format!("unknown vertex `{src}`")))?;
                let target = file
                    .quiver
                    .vertex(&dst)
                    .ok_or_else(|| lx.error_at(&dst_at, format!("unknown vertex `{dst}`")))?;
                file.quiver
                    .add_arrow(&name, source, target)
                    .map_err(|e| lx.error_at(&at, e.to_string()))?;
            }
            "order" => {
                let (kind, at) = lx.ident("an order name")?;
                lx.end()?;
                let kind: OrderKind = kind.parse().map_err(|e: String| lx.error_at(&at, e))?;
                file.order = PathOrder::new(kind);
            }
            "poly" => {
                let (name, at) = lx.ident("a polynomial name")?;
                lx.expect(&Tok::Equals)?;
                let p = lx.expression(&file.quiver)?;
                lx.end()?;
                if file.poly(&name).is_some() {
                    return Err(lx.error_at(&at, format!("polynomial `{name}` defined twice")));
                }
                file.polys.push((name, p));
            }
            "ideal" => {
                let (name, at) = lx.ident("an ideal name")?;
                let (kw, kw_at) = lx.ident("`side=`")?;
                if kw != "side" {
                    return Err(lx.error_at(&kw_at, "expected `side=`"));
                }
                lx.expect(&Tok::Equals)?;
                let (side, side_at) = lx.ident("left, right or twosided")?;
                let side: Side = side.parse().map_err(|e: String| lx.error_at(&side_at, e))?;
                lx.expect(&Tok::Colon)?;
                let mut generators = Vec::new();
                loop {
                    generators.push(lx.generator(&file)?);
                    match lx.next() {
                        None => break,
                        Some(t) if t.tok == Tok::Comma => continue,
                        Some(t) => return Err(lx.error_at(&t, "expected `,` or end of line")),
                    }
                }
                if file.ideal(&name).is_some() {
                    return Err(lx.error_at(&at, format!("ideal `{name}` defined twice")));
                }
                file.ideals.push(IdealDecl {
                    name,
                    side,
                    generators,
                });
            }
            other => return Err(lx.error_at(&head, format!("unknown declaration `{other}`"))),
        }
    }
    Ok(file)
}

/// Parses a single polynomial expression over `quiver`.
pub fn parse_polynomial(quiver: &Quiver, text: &str) -> Result<Polynomial, ParseError> {
    let mut lx = Lexer::new(text, 1);
    let p = lx.expression(quiver)?;
    lx.end()?;
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LBracket,
    RBracket,
    Equals,
    Colon,
    Comma,
    Arrow,
    Bad(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(n) => write!(f, "`{n}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Equals => f.write_str("`=`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Bad(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    column: usize,
}

struct Lexer {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_column: usize,
}

fn tokenize(text: &str) -> Vec<Spanned> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
            {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                column,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Spanned {
                tok: Tok::Number(digits.parse().expect("ascii digits")),
                column,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '=' => Tok::Equals,
            ':' => Tok::Colon,
            ',' => Tok::Comma,
            other => Tok::Bad(other),
        };
        out.push(Spanned { tok, column });
        i += 1;
    }
    out
}

/// A factor of a monomial together with the name used for it in messages.
struct Factor {
    path: Path,
    label: String,
    column: usize,
}

impl Lexer {
    fn new(text: &str, line: usize) -> Lexer {
        Lexer {
            toks: tokenize(text),
            pos: 0,
            line,
            end_column: text.chars().count() + 1,
        }
    }

    fn peek(&self) -> Option<Spanned> {
        self.toks.get(self.pos).cloned()
    }

    fn peek_tok(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: at.column,
            message: message.into(),
        }
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.peek().map_or(self.end_column, |t| t.column),
            message: message.into(),
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error_at(&t, format!("expected {wanted}, found {}", t.tok)),
            None => self.error_here(format!("expected {wanted}, found end of line")),
        }
    }

    fn ident(&mut self, wanted: &str) -> Result<(String, Spanned), ParseError> {
        match self.peek() {
            Some(
                t @ Spanned {
                    tok: Tok::Ident(_), ..
                },
            ) => {
                self.pos += 1;
                let Tok::Ident(name) = t.tok.clone() else {
                    unreachable!()
                };
                Ok((name, t))
            }
            _ => Err(self.unexpected(wanted)),
        }
    }

    fn expect(&mut self, tok: &Tok) -> Result<(), ParseError> {
        if self.peek_tok() == Some(tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.to_string()))
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => {
                Err(self.error_at(&t, format!("unexpected {} at end of declaration", t.tok)))
            }
        }
    }

    /// A generator in an ideal list: a polynomial name, or an inline
    /// expression.
    fn generator(&mut self, file: &ProblemFile) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Ident(name)) = self.peek_tok() {
            let follows = self.toks.get(self.pos + 1).map(|t| &t.tok);
            if matches!(follows, None | Some(Tok::Comma)) {
                if let Some(p) = file.poly(name) {
                    let p = p.clone();
                    self.pos += 1;
                    return Ok(p);
                }
                if file.quiver.arrow(name).is_none() {
                    return Err(self.error_here(format!("unknown polynomial `{name}`")));
                }
            }
        }
        self.expression(&file.quiver)
    }

    fn expression(&mut self, quiver: &Quiver) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero();
        let mut first = true;
        loop {
            let negative = match self.peek_tok() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let term = self.term(quiver)?;
            acc.add_assign(&if negative { -&term } else { term });
        }
        Ok(acc)
    }

    fn term(&mut self, quiver: &Quiver) -> Result<Polynomial, ParseError> {
        let coeff = match self.peek_tok() {
            Some(Tok::Number(_)) => Some(self.rational()?),
            _ => None,
        };
        let mut factors = Vec::new();
        match coeff {
            Some(_) if self.peek_tok() == Some(&Tok::Star) => {
                self.pos += 1;
                self.factors(quiver, &mut factors)?;
            }
            Some(_) => {}
            None => self.factors(quiver, &mut factors)?,
        }
        let coeff = coeff.unwrap_or_else(Scalar::one);
        if factors.is_empty() {
            let mut id = Polynomial::identity(quiver);
            if id.is_zero() && !coeff.is_zero() {
                return Err(self.error_here("a scalar needs at least one declared vertex"));
            }
            id = id.scale(&coeff);
            return Ok(id);
        }
        let path = compose(quiver, &factors, self.line)?;
        Ok(Polynomial::term(coeff, path))
    }

    fn rational(&mut self) -> Result<Scalar, ParseError> {
        let Some(Spanned {
            tok: Tok::Number(n),
            ..
        }) = self.next()
        else {
            return Err(self.unexpected("a number"));
        };
        if self.peek_tok() != Some(&Tok::Slash) {
            return Ok(Scalar::from_integer(n));
        }
        self.pos += 1;
        match self.next() {
            Some(Spanned {
                tok: Tok::Number(d),
                column,
            }) => {
                if d.is_zero() {
                    return Err(ParseError {
                        line: self.line,
                        column,
                        message: "malformed rational: zero denominator".into(),
                    });
                }
                Ok(Scalar::new(n, d))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.unexpected("a denominator (malformed rational)"))
            }
        }
    }

    fn factors(&mut self, quiver: &Quiver, out: &mut Vec<Factor>) -> Result<(), ParseError> {
        loop {
            let (path, label, column) = self.factor(quiver)?;
            let power = if self.peek_tok() == Some(&Tok::Caret) {
                self.pos += 1;
                match self.next() {
                    Some(Spanned {
                        tok: Tok::Number(k),
                        column,
                    }) => usize::try_from(k).map_err(|_| ParseError {
                        line: self.line,
                        column,
                        message: "exponent too large".into(),
                    })?,
                    _ => {
                        self.pos = self.pos.saturating_sub(1);
                        return Err(self.unexpected("an exponent"));
                    }
                }
            } else {
                1
            };
            if power == 0 {
                out.push(Factor {
                    path: Path::trivial(path.source()),
                    label: format!("[{}]", quiver.vertex_name(path.source())),
                    column,
                });
            }
            for _ in 0..power {
                out.push(Factor {
                    path: path.clone(),
                    label: label.clone(),
                    column,
                });
            }
            if self.peek_tok() != Some(&Tok::Star) {
                return Ok(());
            }
            self.pos += 1;
        }
    }

    fn factor(&mut self, quiver: &Quiver) -> Result<(Path, String, usize), ParseError> {
        let Some(t) = self.peek() else {
            return Err(self.unexpected("a factor"));
        };
        match &t.tok {
            Tok::Ident(name) => {
                self.pos += 1;
                if let Some(a) = quiver.arrow(name) {
                    return Ok((Path::arrow(a), name.clone(), t.column));
                }
                if quiver.vertex(name).is_some() {
                    return Err(
                        self.error_at(&t, format!("vertex `{name}` must be written `[{name}]`"))
                    );
                }
                Err(self.error_at(&t, format!("unknown identifier `{name}`")))
            }
            Tok::LBracket => {
                self.pos += 1;
                let (name, at) = self.ident("a vertex name")?;
                self.expect(&Tok::RBracket)?;
                let v = quiver
                    .vertex(&name)
                    .ok_or_else(|| self.error_at(&at, format!("unknown vertex `{name}`")))?;
                Ok((Path::trivial(v), format!("[{name}]"), t.column))
            }
            _ => Err(self.unexpected("a factor")),
        }
    }
}

fn compose(quiver: &Quiver, factors: &[Factor], line: usize) -> Result<Path, ParseError> {
    let mut acc = factors[0].path.clone();
    for pair in factors.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        acc = acc.concat(&b.path).ok_or_else(|| {
            let text: Vec<&str> = factors.iter().map(|f| f.label.as_str()).collect();
            ParseError {
                line,
                column: b.column,
                message: format!(
                    "path {} not composable: target({})={}, source({})={}",
                    text.join("*"),
                    a.label,
                    quiver.vertex_name(a.path.target()),
                    b.label,
                    quiver.vertex_name(b.path.source()),
                ),
            }
        })?;
    }
    Ok(acc)
}
