//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: `expr := [+|-] term ((+|-) term)*`, `term := power (* power)*`,
//! `power := atom [^ integer]`, `atom := integer | identifier | ( expr )`.

use ghilb_core::algebra::{Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' | '-' | '\u{2212}' | '*' | '^' | '(' | ')' => {
                chars.next();
                let tok = match c {
                    '+' => Tok::Plus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Minus,
                };
                out.push((at, tok));
            }
            '0'..='9' => {
                let mut end = at;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    chars.next();
                }
                let v = text[at..end].parse().map_err(|_| ParseError::new(at, "integer literal too large"))?;
                out.push((at, Tok::Int(v)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut end = at;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_alphanumeric() || d == '_') {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                out.push((at, Tok::Ident(text[at..end].to_string())));
            }
            other => return Err(ParseError::new(at, format!("unexpected character '{other}'"))),
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn lift<T>(&self, at: usize, r: ghilb_core::Result<T>) -> Result<T, ParseError> {
        r.map_err(|e| ParseError::new(at, e.to_string()))
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            let at = self.offset();
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.lift(at, acc.add(&t))?;
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.lift(at, acc.sub(&t))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.power()?;
        while *self.peek() == Tok::Star {
            let at = self.offset();
            self.bump();
            let f = self.power()?;
            acc = self.lift(at, acc.mul(&f))?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().1 {
            Tok::Int(e) => {
                let e = u32::try_from(e).map_err(|_| ParseError::new(at, "exponent too large"))?;
                self.lift(at, base.pow(e))
            }
            _ => Err(ParseError::new(at, "expected an integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(v) => {
                let c = (v % self.ring.field().characteristic() as u64) as i64;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => {
                let idx = self
                    .ring
                    .index_of(&name)
                    .ok_or_else(|| ParseError::new(at, format!("unknown variable '{name}'")))?;
                self.lift(at, Polynomial::var(self.ring, idx))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump().1 {
                    Tok::RParen => Ok(inner),
                    _ => Err(ParseError::new(close, "expected ')'")),
                }
            }
            Tok::End => Err(ParseError::new(at, "unexpected end of input")),
            other => Err(ParseError::new(at, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, toks, pos: 0 };
    let f = p.expr()?;
    match p.peek() {
        Tok::End => Ok(f),
        _ => Err(ParseError::new(p.offset(), "trailing input")),
    }
}
