//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, unary minus allowed on the first
//! term only):
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := coeff ("*"? var)? | var
//! var   := "x" ("^" uint)?
//! coeff := uint ("^" uint)?
//! ```
//!
//! A caret after a bare integer is integer exponentiation, so `2^51*x^10`
//! and `2^51x^10` both denote 2^51 times x^10; the base is a literal, never
//! `x`, so the form stays unambiguous. Like terms are collected and the
//! result is canonical.

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Zero};
use thiserror::Error;

use crate::poly::Polynomial;

/// Exponents above this are refused outright; they would only allocate
/// absurd coefficient vectors or integers.
const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Parse an expression into a canonical polynomial.
pub fn parse_poly(text: &str) -> Result<Polynomial, ParseError> {
    Parser {
        bytes: text.as_bytes(),
        pos: 0,
    }
    .parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn parse(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms: Vec<BigInt> = Vec::new();
        self.skip_whitespace();
        if self.peek().is_none() {
            return Err(self.error("expected a polynomial expression"));
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        self.term(negative, &mut terms)?;
        loop {
            self.skip_whitespace();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    self.term(false, &mut terms)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.term(true, &mut terms)?;
                }
                Some(c) => {
                    return Err(self.error(format!(
                        "expected '+', '-', or end of input, found {}",
                        printable(c)
                    )));
                }
            }
        }
        Ok(Polynomial::new(terms))
    }

    fn term(&mut self, negative: bool, terms: &mut Vec<BigInt>) -> Result<(), ParseError> {
        self.skip_whitespace();
        let (coefficient, exponent) = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coefficient = self.coefficient()?;
                self.skip_whitespace();
                let explicit_star = if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_whitespace();
                    true
                } else {
                    false
                };
                if self.peek() == Some(b'x') {
                    (coefficient, self.variable()?)
                } else if explicit_star {
                    return Err(self.error("expected 'x' after '*'"));
                } else {
                    (coefficient, 0)
                }
            }
            Some(b'x') => (BigInt::from(1), self.variable()?),
            Some(c) => return Err(self.error(format!("expected a term, found {}", printable(c)))),
            None => return Err(self.error("expected a term, found end of input")),
        };
        if terms.len() <= exponent {
            terms.resize_with(exponent + 1, BigInt::zero);
        }
        if negative {
            terms[exponent] -= coefficient;
        } else {
            terms[exponent] += coefficient;
        }
        Ok(())
    }

    fn coefficient(&mut self) -> Result<BigInt, ParseError> {
        let base = self.unsigned_integer()?;
        self.skip_whitespace();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exponent = self.bounded_exponent()?;
            Ok(BigInt::from(base.pow(exponent as u32)))
        } else {
            Ok(BigInt::from(base))
        }
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        debug_assert_eq!(self.peek(), Some(b'x'));
        self.pos += 1;
        self.skip_whitespace();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            Ok(self.bounded_exponent()? as usize)
        } else {
            Ok(1)
        }
    }

    fn bounded_exponent(&mut self) -> Result<u64, ParseError> {
        self.skip_whitespace();
        let at = self.pos;
        let value = self.unsigned_integer()?;
        match value.try_into() {
            Ok(v) if v <= MAX_EXPONENT => Ok(v),
            _ => Err(ParseError {
                position: at,
                message: format!("exponent exceeds the supported maximum {MAX_EXPONENT}"),
            }),
        }
    }

    fn unsigned_integer(&mut self) -> Result<BigUint, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a digit"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn skip_whitespace(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }
}

fn printable(byte: u8) -> String {
    if byte.is_ascii_graphic() {
        format!("'{}'", byte as char)
    } else {
        format!("byte 0x{byte:02x}")
    }
}
