use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::ExactPoly;
use crate::Rat;

/// Parse failure with the byte offset of the offending input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(pos: usize, message: &str) -> ParseError {
        ParseError {
            pos,
            message: message.to_string(),
        }
    }

    fn next_token(&mut self) -> Result<(usize, Tok), ParseError> {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.input.len() {
            return Ok((start, Tok::End));
        }
        let c = self.input[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.input.len() && self.input[end].is_ascii_digit() {
                    end += 1;
                }
                let text = core::str::from_utf8(&self.input[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((start, Tok::Int(text.parse().unwrap())));
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut end = self.pos;
                while end < self.input.len()
                    && (self.input[end].is_ascii_alphanumeric() || self.input[end] == b'_')
                {
                    end += 1;
                }
                let text = core::str::from_utf8(&self.input[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((start, Tok::Ident(text.to_string())));
            }
            other => {
                return Err(Self::err(
                    start,
                    &alloc::format!("unexpected character '{}'", other as char),
                ))
            }
        };
        self.pos += 1;
        Ok((start, tok))
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    index: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &(usize, Tok) {
        &self.tokens[self.index]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<ExactPoly, ParseError> {
        let mut acc = match self.peek().1 {
            Tok::Minus => {
                self.bump();
                self.term()?.neg()
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek().1 {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExactPoly, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek().1, Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ExactPoly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().1, Tok::Caret) {
            self.bump();
            let (pos, tok) = self.bump();
            let Tok::Int(n) = tok else {
                return Err(Lexer::err(pos, "expected a nonnegative integer exponent"));
            };
            let exp: u32 = n
                .try_into()
                .map_err(|_| Lexer::err(pos, "exponent too large"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExactPoly, ParseError> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::Int(n) => {
                // Optional denominator: rational scalars are written p/q.
                if matches!(self.peek().1, Tok::Slash) {
                    self.bump();
                    let (dpos, dtok) = self.bump();
                    let Tok::Int(d) = dtok else {
                        return Err(Lexer::err(dpos, "expected an integer denominator"));
                    };
                    if d.is_zero() {
                        return Err(Lexer::err(dpos, "zero denominator"));
                    }
                    return Ok(ExactPoly::constant(Rat::new(n, d), self.nvars()));
                }
                Ok(ExactPoly::constant(Rat::from_integer(n), self.nvars()))
            }
            Tok::Ident(name) => {
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return Err(Lexer::err(
                        pos,
                        &alloc::format!("unknown variable '{name}'"),
                    ));
                };
                Ok(ExactPoly::var(i, self.nvars()))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (cpos, ctok) = self.bump();
                if ctok != Tok::RParen {
                    return Err(Lexer::err(cpos, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::Minus => Ok(self.factor()?.neg()),
            Tok::End => Err(Lexer::err(pos, "unexpected end of input")),
            _ => Err(Lexer::err(pos, "expected a number, variable, or '('")),
        }
    }
}

/// Parses polynomial text over the named variables.
///
/// The grammar: integer and `p/q` rational scalars, variable names matching
/// `[a-zA-Z][a-zA-Z0-9_]*`, operators `+ - * ^` with the usual precedence,
/// parentheses, insignificant whitespace. Implicit multiplication is a syntax
/// error, as is `/` anywhere except between two integer literals.
pub fn parse_poly(text: &str, vars: &[&str]) -> Result<ExactPoly, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut tokens = Vec::new();
    loop {
        let t = lexer.next_token()?;
        let done = t.1 == Tok::End;
        tokens.push(t);
        if done {
            break;
        }
    }
    let mut parser = Parser {
        tokens,
        index: 0,
        vars,
    };
    let poly = parser.expr()?;
    let (pos, tok) = parser.peek().clone();
    if tok != Tok::End {
        return Err(Lexer::err(pos, "unexpected trailing input"));
    }
    Ok(poly)
}
