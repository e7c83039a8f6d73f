//! Polynomial grammar:
//!
//! ```text
//! sum    := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' sum ')'
//! ```
//!
//! Variables are `x1..xn` for polynomials and `a1..an` for operators.
//! Division is only allowed by nonzero constants, which is how rational
//! literals such as `3/4` are written.

use std::fmt;
use std::ops::Range;

use apolar_core::field::parse_bigint;
use apolar_core::{Field, Polynomial};
use num_bigint::BigInt;
use num_traits::One;

/// Which variable letter the text may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// `x1, x2, …`
    Dual,
    /// `a1, a2, …`
    Operator,
}

impl VarKind {
    fn letter(self) -> char {
        match self {
            VarKind::Dual => 'x',
            VarKind::Operator => 'a',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(String),
    IndexOutOfRange { index: usize, nvars: usize },
    MalformedExponent,
    ExponentTooLarge,
    NonConstantDivisor,
    DivisionByZero,
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte range in the source text.
    pub span: Range<usize>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ParseErrorKind::*;
        match &self.kind {
            UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            UnexpectedToken(t) => write!(f, "unexpected '{t}'"),
            UnexpectedEnd => f.write_str("unexpected end of input"),
            UnknownVariable(v) => write!(f, "unknown variable '{v}'"),
            IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} exceeds the number of variables ({nvars})")
            }
            MalformedExponent => f.write_str("exponent must be a nonnegative integer"),
            ExponentTooLarge => f.write_str("exponent too large"),
            NonConstantDivisor => f.write_str("can only divide by a nonzero constant"),
            DivisionByZero => f.write_str("division by zero"),
            Empty => f.write_str("empty expression"),
        }?;
        write!(f, " at {}..{}", self.span.start, self.span.end)
    }
}

impl ParseError {
    /// The source line with a caret marker under the offending span.
    pub fn render(&self, src: &str) -> String {
        let start = src[..self.span.start.min(src.len())].chars().count();
        let width = src[self.span.start.min(src.len())..self.span.end.min(src.len())].chars().count().max(1);
        format!("{src}\n{}{}\n{self}", " ".repeat(start), "^".repeat(width))
    }
}

const MAX_EXPONENT: u64 = 4096;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char, String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(Tok, Range<usize>)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = src[i..].chars().next().unwrap();
        let start = i;
        if c.is_whitespace() {
            i += c.len_utf8();
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            i += 1;
            out.push((t, start..i));
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(parse_bigint(&src[start..i]).expect("digits")), start..i));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            i += c.len_utf8();
            while i < bytes.len() {
                let d = src[i..].chars().next().unwrap();
                if d.is_alphanumeric() || d == '_' {
                    i += d.len_utf8();
                } else {
                    break;
                }
            }
            let word = &src[start..i];
            out.push((Tok::Var(c, word[c.len_utf8()..].to_string()), start..i));
            continue;
        }
        return Err(ParseError { kind: ParseErrorKind::UnexpectedChar(c), span: start..start + c.len_utf8() });
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    src: &'a str,
    toks: Vec<(Tok, Range<usize>)>,
    pos: usize,
    n: usize,
    kind: VarKind,
    field: F,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Range<usize> {
        match self.toks.get(self.pos) {
            Some((_, s)) => s.clone(),
            None => self.src.len()..self.src.len(),
        }
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, span: self.span() }
    }

    fn unexpected(&self) -> ParseError {
        match self.toks.get(self.pos) {
            Some((_, s)) => self.err(ParseErrorKind::UnexpectedToken(self.src[s.clone()].to_string())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn sum(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let start = self.span().start;
                    let d = self.unary()?;
                    let span = start..self.toks[self.pos - 1].1.end;
                    let c = match d.degree() {
                        Some(0) => d.coeff(&apolar_core::monomial::Monomial::one(self.n)),
                        None => return Err(ParseError { kind: ParseErrorKind::DivisionByZero, span }),
                        Some(_) => return Err(ParseError { kind: ParseErrorKind::NonConstantDivisor, span }),
                    };
                    let inv = self.field.inv(&c).ok_or(ParseError { kind: ParseErrorKind::DivisionByZero, span })?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let caret = self.span();
        self.pos += 1;
        let e = match self.toks.get(self.pos) {
            Some((Tok::Num(v), s)) => {
                let s = s.clone();
                self.pos += 1;
                let e: u64 =
                    v.try_into().map_err(|_| ParseError { kind: ParseErrorKind::ExponentTooLarge, span: s.clone() })?;
                if e > MAX_EXPONENT {
                    return Err(ParseError { kind: ParseErrorKind::ExponentTooLarge, span: s });
                }
                e
            }
            Some((_, s)) => {
                return Err(ParseError { kind: ParseErrorKind::MalformedExponent, span: caret.start..s.end });
            }
            None => return Err(ParseError { kind: ParseErrorKind::MalformedExponent, span: caret }),
        };
        let top = base.degree().unwrap_or(0) as u64;
        if top * e > u16::MAX as u64 {
            return Err(ParseError { kind: ParseErrorKind::ExponentTooLarge, span: caret });
        }
        let mut acc = Polynomial::one(self.n, self.field.clone());
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        let Some((tok, span)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err(ParseErrorKind::UnexpectedEnd));
        };
        match tok {
            Tok::Num(v) => {
                self.pos += 1;
                let c = self
                    .field
                    .from_ratio(&v, &BigInt::one())
                    .map_err(|_| ParseError { kind: ParseErrorKind::DivisionByZero, span })?;
                Ok(Polynomial::constant(self.n, self.field.clone(), c))
            }
            Tok::Var(letter, rest) => {
                let name = &self.src[span.clone()];
                let unknown =
                    || ParseError { kind: ParseErrorKind::UnknownVariable(name.to_string()), span: span.clone() };
                if letter != self.kind.letter() || rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(unknown());
                }
                let index: usize = rest.parse().map_err(|_| unknown())?;
                if index == 0 {
                    return Err(unknown());
                }
                if index > self.n {
                    return Err(ParseError { kind: ParseErrorKind::IndexOutOfRange { index, nvars: self.n }, span });
                }
                self.pos += 1;
                Ok(Polynomial::var(self.n, self.field.clone(), index - 1))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// The largest variable index mentioned with the given letter.
pub fn max_variable_index(src: &str, kind: VarKind) -> usize {
    let Ok(toks) = lex(src) else { return 0 };
    toks.iter()
        .filter_map(|(t, _)| match t {
            Tok::Var(l, rest) if *l == kind.letter() => rest.parse::<usize>().ok(),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

/// Parses `src` as an element of `k[x1..xn]` (or `k[a1..an]`).
pub fn parse_polynomial<F: Field>(src: &str, n: usize, kind: VarKind, field: F) -> Result<Polynomial<F>, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError { kind: ParseErrorKind::Empty, span: 0..src.len() });
    }
    let mut p = Parser { src, toks, pos: 0, n, kind, field };
    let out = p.sum()?;
    if p.pos < p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use apolar_core::Rationals;

    #[test]
    fn spans_point_at_offender() {
        let e = parse_polynomial("x1 + y2", 2, VarKind::Dual, Rationals).unwrap_err();
        assert_eq!(e.span, 5..7);
        assert_eq!(e.render("x1 + y2").lines().nth(1), Some("     ^^"));
    }
}
