//! Recursive-descent parser for value expressions such as `z(8)+z(8)^7`.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | integer '/' positive-integer | 'z(' positive-integer ')'
//!         | '(' expr ')' | '-' atom
//! ```
//!
//! `z(n)` is e^{2πi/n}. Unary minus is part of `atom`, so `-z(5)^2` means
//! `(-z(5))^2`.

use num_bigint::BigInt;

use super::{CycloError, Cyclotomic, Rational};

const MAX_EXPONENT: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at offset {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

pub fn parse_value(text: &str) -> Result<Cyclotomic, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses a set literal `{expr, expr, ...}`; duplicates are kept as written.
pub fn parse_value_set(text: &str) -> Result<Vec<Cyclotomic>, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.expect(b'{')?;
    let mut out = Vec::new();
    p.skip_ws();
    if p.peek() == Some(b'}') {
        p.pos += 1;
    } else {
        loop {
            out.push(p.expr()?);
            p.skip_ws();
            match p.peek() {
                Some(b',') => p.pos += 1,
                Some(b'}') => {
                    p.pos += 1;
                    break;
                }
                _ => return Err(p.error("expected ',' or '}'")),
            }
        }
    }
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Cyclotomic, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Cyclotomic, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let mag = self.integer()?;
        let exp = i64::try_from(mag)
            .ok()
            .filter(|e| *e <= MAX_EXPONENT)
            .ok_or_else(|| ParseError { position: start, message: "exponent too large".into() })?;
        let exp = if negative { -exp } else { exp };
        base.pow(exp).map_err(|e| ParseError { position: start, message: e.to_string() })
    }

    fn atom(&mut self) -> Result<Cyclotomic, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'z') => {
                self.pos += 1;
                self.expect(b'(')?;
                self.skip_ws();
                let at = self.pos;
                let n = self.integer()?;
                self.expect(b')')?;
                let n =
                    u32::try_from(n).map_err(|_| ParseError { position: at, message: "conductor too large".into() })?;
                Cyclotomic::root_of_unity(n, 1).map_err(|e| ParseError {
                    position: at,
                    message: match e {
                        CycloError::ZeroOrder => "z(0) is not a root of unity".into(),
                        other => other.to_string(),
                    },
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                self.skip_ws();
                if self.peek() != Some(b'/') {
                    return Ok(Cyclotomic::from_rational(Rational::from_bigint(numer)));
                }
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let denom = self.integer()?;
                Rational::from_bigints(numer, denom)
                    .map(Cyclotomic::from_rational)
                    .ok_or(ParseError { position: at, message: "zero denominator".into() })
            }
            Some(_) => Err(self.error("expected a number, z(n), '(' or '-'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }
}
