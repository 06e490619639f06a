//! Construction expressions.
//!
//! ```text
//! expr := chain(INT) | boolean(INT) | dual(expr) | double(expr)
//!       | dni(expr, INT, INT, INT)
//!       | join(expr, expr)
//!       | glue([expr, ...], [[INT, ...], ...])
//!       | dp(INT, [[INT, INT], ...], INT)
//!       | lemma2(INT, INT) | lemma3(INT)
//! ```
//!
//! Whitespace is ignored. Ranks are computed while parsing so that range
//! errors point at the offending argument.

use std::fmt;

use crate::construct::{
    dp_poset, glue, horizontal_double, join, lemma2_poset, lemma3_poset, replicate_interval,
    IntervalSystem,
};
use crate::error::{Error, Result};
use crate::poset::{boolean, chain, RankedPoset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Chain(usize),
    Boolean(usize),
    Dual(Box<Expr>),
    Double(Box<Expr>),
    Dni {
        inner: Box<Expr>,
        i: usize,
        j: usize,
        copies: u64,
    },
    Join(Box<Expr>, Box<Expr>),
    Glue(Vec<(Expr, Vec<usize>)>),
    Dp {
        n: usize,
        intervals: Vec<(usize, usize)>,
        copies: u64,
    },
    Lemma2 {
        n: usize,
        copies: u64,
    },
    Lemma3 {
        copies: u64,
    },
}

impl Expr {
    pub fn rank(&self) -> usize {
        match self {
            Expr::Chain(k) | Expr::Boolean(k) => *k,
            Expr::Dual(e) | Expr::Double(e) => e.rank(),
            Expr::Dni { inner, .. } => inner.rank(),
            Expr::Join(a, b) => a.rank() + b.rank() - 1,
            Expr::Glue(parts) => parts[0].0.rank(),
            Expr::Dp { n, .. } | Expr::Lemma2 { n, .. } => n + 1,
            Expr::Lemma3 { .. } => 7,
        }
    }

    pub fn eval(&self) -> Result<RankedPoset> {
        match self {
            Expr::Chain(k) => chain(*k),
            Expr::Boolean(k) => boolean(*k),
            Expr::Dual(e) => Ok(e.eval()?.dual()),
            Expr::Double(e) => horizontal_double(&e.eval()?),
            Expr::Dni {
                inner,
                i,
                j,
                copies,
            } => replicate_interval(&inner.eval()?, *i, *j, *copies),
            Expr::Join(a, b) => join(&a.eval()?, &b.eval()?),
            Expr::Glue(parts) => {
                let built = parts
                    .iter()
                    .map(|(e, ranks)| Ok((e.eval()?, ranks.clone())))
                    .collect::<Result<Vec<_>>>()?;
                glue(&built)
            }
            Expr::Dp {
                n,
                intervals,
                copies,
            } => {
                let sys = IntervalSystem::new(*n, intervals.iter().copied())?;
                dp_poset(*n, &sys, *copies, false)
            }
            Expr::Lemma2 { n, copies } => lemma2_poset(*n, *copies),
            Expr::Lemma3 { copies } => lemma3_poset(*copies),
        }
    }
}

fn list<T>(
    f: &mut fmt::Formatter<'_>,
    items: &[T],
    each: impl Fn(&mut fmt::Formatter<'_>, &T) -> fmt::Result,
) -> fmt::Result {
    f.write_str("[")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        each(f, x)?;
    }
    f.write_str("]")
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Chain(k) => write!(f, "chain({k})"),
            Expr::Boolean(k) => write!(f, "boolean({k})"),
            Expr::Dual(e) => write!(f, "dual({e})"),
            Expr::Double(e) => write!(f, "double({e})"),
            Expr::Dni {
                inner,
                i,
                j,
                copies,
            } => write!(f, "dni({inner},{i},{j},{copies})"),
            Expr::Join(a, b) => write!(f, "join({a},{b})"),
            Expr::Glue(parts) => {
                f.write_str("glue(")?;
                list(f, parts, |f, (e, _)| write!(f, "{e}"))?;
                f.write_str(",")?;
                list(f, parts, |f, (_, ranks)| {
                    list(f, ranks, |f, r| write!(f, "{r}"))
                })?;
                f.write_str(")")
            }
            Expr::Dp {
                n,
                intervals,
                copies,
            } => {
                write!(f, "dp({n},")?;
                list(f, intervals, |f, (i, j)| write!(f, "[{i},{j}]"))?;
                write!(f, ",{copies})")
            }
            Expr::Lemma2 { n, copies } => write!(f, "lemma2({n},{copies})"),
            Expr::Lemma3 { copies } => write!(f, "lemma3({copies})"),
        }
    }
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expression(s)
    }
}

pub fn parse_expression(text: &str) -> Result<Expr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error_at(p.pos, "expected end of input"));
    }
    Ok(e)
}

/// Parses and builds in one step.
pub fn build(text: &str) -> Result<RankedPoset> {
    parse_expression(text)?.eval()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error_at(&self, offset: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

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
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(self.error_at(
                self.pos,
                format!("expected '{}', found '{}'", c as char, got as char),
            )),
            None => Err(self.error_at(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn ident(&mut self) -> Result<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_at(start, "expected a constructor name"));
        }
        // ASCII alphanumerics only, so this slice is valid UTF-8.
        Ok((
            start,
            std::str::from_utf8(&self.src[start..self.pos]).unwrap(),
        ))
    }

    fn int(&mut self) -> Result<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error_at(start, "expected an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v = text
            .parse::<u64>()
            .map_err(|_| self.error_at(start, "integer too large"))?;
        Ok((start, v))
    }

    fn small(&mut self) -> Result<(usize, usize)> {
        let (at, v) = self.int()?;
        let v = usize::try_from(v)
            .ok()
            .filter(|&v| v <= 10_000)
            .ok_or_else(|| self.error_at(at, "rank argument too large"))?;
        Ok((at, v))
    }

    fn copies(&mut self) -> Result<u64> {
        let (at, v) = self.int()?;
        if v < 1 {
            return Err(self.error_at(at, "copy count must be at least 1"));
        }
        Ok(v)
    }

    /// `[a, b, ...]` with a per-item parser.
    fn bracketed<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.error_at(self.pos, "expected ',' or ']'")),
            }
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let (at, name) = self.ident()?;
        let name = name.to_string();
        self.expect(b'(')?;
        let e = match name.as_str() {
            "chain" => {
                let (at, k) = self.small()?;
                if k < 1 {
                    return Err(self.error_at(at, "chain rank must be at least 1"));
                }
                Expr::Chain(k)
            }
            "boolean" => {
                let (at, k) = self.small()?;
                if k < 1 {
                    return Err(self.error_at(at, "boolean rank must be at least 1"));
                }
                Expr::Boolean(k)
            }
            "dual" => Expr::Dual(Box::new(self.expr()?)),
            "double" => Expr::Double(Box::new(self.expr()?)),
            "dni" => {
                let inner = self.expr()?;
                let top = inner.rank();
                self.expect(b',')?;
                let (at_i, i) = self.small()?;
                self.expect(b',')?;
                let (at_j, j) = self.small()?;
                if i < 1 || i >= top {
                    return Err(self.error_at(at_i, format!("interval start {i} outside [1,{}]", top - 1)));
                }
                if j < i || j >= top {
                    return Err(self.error_at(at_j, format!("interval end {j} outside [{i},{}]", top - 1)));
                }
                self.expect(b',')?;
                let copies = self.copies()?;
                Expr::Dni {
                    inner: Box::new(inner),
                    i,
                    j,
                    copies,
                }
            }
            "join" => {
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                Expr::Join(Box::new(a), Box::new(b))
            }
            "glue" => self.glue(at)?,
            "dp" => {
                let (_, n) = self.small()?;
                self.expect(b',')?;
                let intervals = self.bracketed(|p| {
                    p.skip_ws();
                    let start = p.pos;
                    let pair = p.bracketed(|p| p.small().map(|(_, v)| v))?;
                    match *pair.as_slice() {
                        [i, j] if 1 <= i && i <= j && j <= n => Ok((i, j)),
                        [i, j] => Err(p.error_at(start, format!("interval [{i},{j}] not inside [1,{n}]"))),
                        _ => Err(p.error_at(start, "an interval is a pair [i,j]")),
                    }
                })?;
                self.expect(b',')?;
                let copies = self.copies()?;
                Expr::Dp { n, intervals, copies }
            }
            "lemma2" => {
                let (at_n, n) = self.small()?;
                if n < 7 || n % 2 == 0 {
                    return Err(self.error_at(at_n, "lemma2 needs odd n >= 7"));
                }
                self.expect(b',')?;
                let copies = self.copies()?;
                Expr::Lemma2 { n, copies }
            }
            "lemma3" => Expr::Lemma3 {
                copies: self.copies()?,
            },
            other => {
                return Err(self.error_at(
                    at,
                    format!(
                        "unknown constructor '{other}', expected one of chain, boolean, dual, double, dni, join, glue, dp, lemma2, lemma3"
                    ),
                ))
            }
        };
        self.expect(b')')?;
        Ok(e)
    }

    fn glue(&mut self, at: usize) -> Result<Expr> {
        let parts = self.bracketed(|p| p.expr())?;
        if parts.is_empty() {
            return Err(self.error_at(at, "glue needs at least one part"));
        }
        self.expect(b',')?;
        let sets_at = self.pos;
        let sets = self.bracketed(|p| {
            p.skip_ws();
            let start = p.pos;
            Ok((start, p.bracketed(|p| p.small().map(|(_, v)| v))?))
        })?;
        if sets.len() != parts.len() {
            return Err(self.error_at(
                sets_at,
                format!("{} parts but {} glue-rank sets", parts.len(), sets.len()),
            ));
        }
        let top = parts[0].rank();
        for (e, (start, ranks)) in parts.iter().zip(&sets) {
            if e.rank() != top {
                return Err(self.error_at(
                    *start,
                    format!("part {e} has rank {}, expected {top}", e.rank()),
                ));
            }
            if !ranks.contains(&0) || !ranks.contains(&top) {
                return Err(self.error_at(*start, format!("glue ranks must include 0 and {top}")));
            }
            if let Some(r) = ranks.iter().find(|&&r| r > top) {
                return Err(self.error_at(*start, format!("glue rank {r} exceeds {top}")));
            }
        }
        Ok(Expr::Glue(
            parts
                .into_iter()
                .zip(sets)
                .map(|(e, (_, r))| (e, r))
                .collect(),
        ))
    }
}
