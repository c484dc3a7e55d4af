//! Textual polynomial syntax, e.g. `D - 3/2*t^2` or `b*c^-1`.
//!
//! Grammar:
//! ```text
//! expr     := [sign] term (sign term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ['^' [-] integer] | '(' expr ')'
//! rational := integer ['/' integer]
//! ```
//! Negative exponents are only allowed on inverted variables.

use std::str::FromStr;

use num::One;

use super::poly::{Coeff, Poly};
use super::ring::PolyRing;
use super::CommAlgError;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Coeff),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Tok, CommAlgError> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let c = self.src[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Tok::Minus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            b'(' => {
                self.pos += 1;
                Ok(Tok::LParen)
            }
            b')' => {
                self.pos += 1;
                Ok(Tok::RParen)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                // optional /denominator
                let mut end = self.pos;
                let save = self.pos;
                self.skip_ws();
                if self.pos < self.src.len() && self.src[self.pos] == b'/' {
                    self.pos += 1;
                    self.skip_ws();
                    let dstart = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    if self.pos == dstart {
                        return Err(CommAlgError::Parse("expected denominator".into()));
                    }
                    let numer = std::str::from_utf8(&self.src[start..end]).unwrap();
                    let denom = std::str::from_utf8(&self.src[dstart..self.pos]).unwrap();
                    let text = format!("{numer}/{denom}");
                    let q = Coeff::from_str(&text)
                        .map_err(|_| CommAlgError::Parse(format!("bad rational `{text}`")))?;
                    return Ok(Tok::Num(q));
                }
                self.pos = save;
                end = save;
                let text = std::str::from_utf8(&self.src[start..end]).unwrap();
                let q = Coeff::from_str(text)
                    .map_err(|_| CommAlgError::Parse(format!("bad integer `{text}`")))?;
                Ok(Tok::Num(q))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(
                    std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
                ))
            }
            other => Err(CommAlgError::Parse(format!(
                "unexpected character `{}`",
                other as char
            ))),
        }
    }
}

struct Parser<'a> {
    ring: &'a PolyRing,
    lexer: Lexer<'a>,
    lookahead: Tok,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a PolyRing, src: &'a str) -> Result<Self, CommAlgError> {
        let mut lexer = Lexer::new(src);
        let lookahead = lexer.next()?;
        Ok(Parser { ring, lexer, lookahead })
    }

    fn bump(&mut self) -> Result<Tok, CommAlgError> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.lookahead, next))
    }

    fn expr(&mut self) -> Result<Poly, CommAlgError> {
        let mut negate = false;
        loop {
            match self.lookahead {
                Tok::Minus => {
                    negate = !negate;
                    self.bump()?;
                }
                Tok::Plus => {
                    self.bump()?;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            let minus = match self.lookahead {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump()?;
            let t = self.term()?;
            acc = if minus { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, CommAlgError> {
        let mut acc = self.factor()?;
        while self.lookahead == Tok::Star {
            self.bump()?;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, CommAlgError> {
        match self.bump()? {
            Tok::Num(q) => Ok(Poly::constant(self.ring, q)),
            Tok::Ident(name) => {
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or(CommAlgError::UnknownVariable(name))?;
                let exp = if self.lookahead == Tok::Caret {
                    self.bump()?;
                    let neg = if self.lookahead == Tok::Minus {
                        self.bump()?;
                        true
                    } else {
                        false
                    };
                    match self.bump()? {
                        Tok::Num(q) if q.is_integer() && !num::Signed::is_negative(&q) => {
                            let e: i64 = num::ToPrimitive::to_i64(&q.to_integer())
                                .ok_or_else(|| CommAlgError::Parse("exponent too large".into()))?;
                            if neg {
                                -e
                            } else {
                                e
                            }
                        }
                        _ => return Err(CommAlgError::Parse("expected integer exponent".into())),
                    }
                } else {
                    1
                };
                Poly::var_pow(self.ring, i, exp)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump()? {
                    Tok::RParen => Ok(inner),
                    _ => Err(CommAlgError::Parse("expected `)`".into())),
                }
            }
            tok => Err(CommAlgError::Parse(format!("unexpected token {tok:?}"))),
        }
    }
}

/// Parse a polynomial in the given ring's variables.
pub fn parse_poly(ring: &PolyRing, src: &str) -> Result<Poly, CommAlgError> {
    let mut p = Parser::new(ring, src)?;
    let poly = p.expr()?;
    if p.lookahead != Tok::End {
        return Err(CommAlgError::Parse(format!(
            "trailing input near {:?}",
            p.lookahead
        )));
    }
    Ok(poly)
}

/// Parse a rational number such as `-5`, `3/2`.
pub fn parse_rational(src: &str) -> Result<Coeff, CommAlgError> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    Coeff::from_str(&s).map_err(|_| CommAlgError::Parse(format!("bad rational `{src}`")))
}

#[allow(dead_code)]
fn one() -> Coeff {
    Coeff::one()
}
