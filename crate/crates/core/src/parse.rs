//! Text syntax for group-ring polynomials and matrices.
//!
//! ```text
//! matrix := '[' row (',' row)* ']' | expr
//! row    := '[' expr (',' expr)* ']'
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' int)?
//! atom   := int | 't' | element-name | cycle | '(' expr ')'
//! ```
//!
//! Element names are the group's display names (`e`, `g`, `r`, `s`, ...).
//! Over a symmetric group, a parenthesised list of two or more points such as
//! `(143)` or `(1,4,3)` is a cycle; juxtaposed cycles multiply.

use crate::error::{Error, Result};
use crate::groupring::GRElem;
use crate::groups::GroupRef;
use crate::matrix::{MatGR, MatGRPoly, Matrix};
use crate::poly::GRPoly;
use crate::ring::Ring;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Cycle(Vec<usize>),
    Sym(char),
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
    symmetric: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct Origin {
    pub line: usize,
    pub column: usize,
}

impl Default for Origin {
    fn default() -> Self {
        Origin { line: 1, column: 1 }
    }
}

fn error_at(src: &str, origin: Origin, byte: usize, message: impl Into<String>) -> Error {
    let before = &src[..byte.min(src.len())];
    let line_off = before.matches('\n').count();
    let col = match before.rfind('\n') {
        Some(k) => before[k + 1..].chars().count() + 1,
        None => before.chars().count() + origin.column,
    };
    Error::Parse {
        line: origin.line + line_off,
        column: col,
        message: message.into(),
    }
}

impl<'a> Lexer<'a> {
    fn tokens(src: &'a str, symmetric: bool, origin: Origin) -> Result<Vec<(usize, Tok)>> {
        let mut lx = Lexer {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
            symmetric,
        };
        let mut out = Vec::new();
        while let Some(&(at, c)) = lx.chars.get(lx.pos) {
            if c.is_whitespace() {
                lx.pos += 1;
            } else if c.is_ascii_digit() {
                let start = lx.pos;
                while lx
                    .chars
                    .get(lx.pos)
                    .is_some_and(|(_, c)| c.is_ascii_digit())
                {
                    lx.pos += 1;
                }
                let s: String = lx.chars[start..lx.pos].iter().map(|(_, c)| c).collect();
                out.push((at, Tok::Int(s.parse().unwrap())));
            } else if c.is_alphabetic() || c == '_' {
                let start = lx.pos;
                while lx
                    .chars
                    .get(lx.pos)
                    .is_some_and(|(_, c)| c.is_alphanumeric() || *c == '_')
                {
                    lx.pos += 1;
                }
                let s: String = lx.chars[start..lx.pos].iter().map(|(_, c)| c).collect();
                out.push((at, Tok::Ident(s)));
            } else if c == '(' && lx.symmetric {
                match lx.try_cycle() {
                    Some(points) => out.push((at, Tok::Cycle(points))),
                    None => {
                        lx.pos += 1;
                        out.push((at, Tok::Sym('(')));
                    }
                }
            } else if "+-*^()[],".contains(c) {
                lx.pos += 1;
                out.push((at, Tok::Sym(c)));
            } else {
                return Err(error_at(
                    lx.src,
                    origin,
                    at,
                    format!("unexpected character {c:?}"),
                ));
            }
        }
        Ok(out)
    }

    fn try_cycle(&mut self) -> Option<Vec<usize>> {
        let mut k = self.pos + 1;
        let mut body = String::new();
        loop {
            let (_, c) = *self.chars.get(k)?;
            if c == ')' {
                break;
            }
            if !(c.is_ascii_digit() || c == ',' || c == ' ') {
                return None;
            }
            body.push(c);
            k += 1;
        }
        let points: Vec<usize> = if body.contains(',') {
            body.split(',')
                .map(|p| p.trim().parse().ok())
                .collect::<Option<_>>()?
        } else {
            body.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?
        };
        if points.len() < 2 {
            return None;
        }
        self.pos = k + 1;
        Some(points)
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    group: &'a GroupRef,
    src: &'a str,
    origin: Origin,
}

impl<'a> Parser<'a> {
    fn new(group: &'a GroupRef, src: &'a str, origin: Origin) -> Result<Self> {
        let toks = Lexer::tokens(src, group.is_symmetric(), origin)?;
        Ok(Parser {
            toks,
            pos: 0,
            group,
            src,
            origin,
        })
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let at = self.toks.get(self.pos).map_or(self.src.len(), |(a, _)| *a);
        error_at(self.src, self.origin, at, message)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn expr(&mut self) -> Result<GRPoly> {
        let mut acc = GRPoly::zero(self.group);
        let mut sign_neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
            if self.eat('+') {
                sign_neg = false;
            } else if self.eat('-') {
                sign_neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    // Juxtaposition multiplies only after an integer ("2t") or before a cycle.
    fn implicit_product(&self, after_int: bool) -> bool {
        match self.peek() {
            Some(Tok::Cycle(_)) => true,
            Some(Tok::Ident(_)) | Some(Tok::Sym('(')) => after_int,
            _ => false,
        }
    }

    fn term(&mut self) -> Result<GRPoly> {
        let mut after_int = matches!(self.peek(), Some(Tok::Int(_)));
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.implicit_product(after_int) {
                after_int = matches!(self.peek(), Some(Tok::Int(_)));
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<GRPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = match self.peek() {
                Some(Tok::Int(k)) => k.to_usize().filter(|&k| k <= 100_000),
                _ => None,
            }
            .ok_or_else(|| self.err("expected a small nonnegative integer exponent"))?;
            self.pos += 1;
            let mut out = GRPoly::one(self.group);
            for _ in 0..k {
                out = out.mul(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<GRPoly> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.err("unexpected end of input"))?;
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(GRPoly::from_int(self.group, n))
            }
            Tok::Ident(name) => {
                if name == "t" {
                    self.pos += 1;
                    return Ok(GRPoly::t(self.group));
                }
                match self.group.lookup(&name) {
                    Some(g) => {
                        self.pos += 1;
                        Ok(GRPoly::constant(GRElem::basis(self.group, g)))
                    }
                    None => Err(self.err(format!("unknown group element {name:?}"))),
                }
            }
            Tok::Cycle(points) => {
                let n = self.group.symmetric_degree().unwrap_or(0);
                let mut perm: Vec<usize> = (0..n).collect();
                let mut seen = vec![false; n];
                for &p in &points {
                    if p == 0 || p > n || seen[p - 1] {
                        return Err(self.err(format!("invalid cycle on {n} points")));
                    }
                    seen[p - 1] = true;
                }
                for k in 0..points.len() {
                    perm[points[k] - 1] = points[(k + 1) % points.len()] - 1;
                }
                let g = self
                    .group
                    .from_permutation(&perm)
                    .ok_or_else(|| self.err("cycle not in group"))?;
                self.pos += 1;
                Ok(GRPoly::constant(GRElem::basis(self.group, g)))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Sym(c) => Err(self.err(format!("unexpected '{c}'"))),
        }
    }

    fn matrix(&mut self) -> Result<MatGRPoly> {
        if self.peek() != Some(&Tok::Sym('[')) {
            let e = self.expr()?;
            return Ok(Matrix::from_rows(vec![vec![e]], GRPoly::zero(self.group)).unwrap());
        }
        self.expect('[')?;
        let mut rows: Vec<Vec<GRPoly>> = Vec::new();
        loop {
            let row_start = self.pos;
            self.expect('[')?;
            let mut row = Vec::new();
            if !self.eat(']') {
                loop {
                    row.push(self.expr()?);
                    if self.eat(']') {
                        break;
                    }
                    self.expect(',')?;
                }
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    self.pos = row_start;
                    return Err(self.err(format!(
                        "row has {} entries, expected {}",
                        row.len(),
                        first.len()
                    )));
                }
            }
            rows.push(row);
            if self.eat(']') {
                break;
            }
            self.expect(',')?;
        }
        Matrix::from_rows(rows, GRPoly::zero(self.group))
    }
}

fn finish<T>(p: &Parser, v: T) -> Result<T> {
    if p.at_end() {
        Ok(v)
    } else {
        Err(p.err("trailing input"))
    }
}

pub fn parse_poly(group: &GroupRef, text: &str) -> Result<GRPoly> {
    parse_poly_at(group, text, Origin::default())
}

pub fn parse_poly_at(group: &GroupRef, text: &str, origin: Origin) -> Result<GRPoly> {
    let mut p = Parser::new(group, text, origin)?;
    let v = p.expr()?;
    finish(&p, v)
}

pub fn parse_elem(group: &GroupRef, text: &str) -> Result<GRElem> {
    let p = parse_poly(group, text)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected a group ring element without t".into(),
        });
    }
    Ok(p.constant_term())
}

pub fn parse_matrix(group: &GroupRef, text: &str) -> Result<MatGRPoly> {
    parse_matrix_at(group, text, Origin::default())
}

pub fn parse_matrix_at(group: &GroupRef, text: &str, origin: Origin) -> Result<MatGRPoly> {
    let mut p = Parser::new(group, text, origin)?;
    let v = p.matrix()?;
    finish(&p, v)
}

/// Parses a matrix that must not involve `t`.
pub fn parse_const_matrix(group: &GroupRef, text: &str) -> Result<MatGR> {
    let m = parse_matrix(group, text)?;
    to_const(&m).ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: "matrix must not involve t".into(),
    })
}

pub fn to_const(m: &MatGRPoly) -> Option<MatGR> {
    if m.degree().unwrap_or(0) > 0 {
        return None;
    }
    Some(m.coeff_matrix(0))
}

pub fn render_matrix<R: crate::ring::Ring + std::fmt::Display>(m: &Matrix<R>) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            format!(
                "[{}]",
                m.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
