//! Text grammar for polynomials:
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | variable ['^' integer]
//! ```
//!
//! Whitespace is insignificant. Columns in errors are 1-based character offsets.

use super::{ExponentVector, Polynomial, RingRef};
use crate::error::{AlgebraError, Result};

struct Parser<'a> {
    ring: &'a RingRef,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Integer literal reduced mod `modulus` (or kept exact when `modulus` is 0).
    fn integer(&mut self, modulus: u64) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = if modulus == 0 {
                match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                    Some(v) => v,
                    None => return self.err("integer too large"),
                }
            } else {
                (value * 10 + d as u64) % modulus
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        Ok(value)
    }

    fn identifier(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return self.err("expected a variable or integer");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn term(&mut self) -> Result<(ExponentVector, u64)> {
        let p = self.ring.characteristic();
        let mut exps = vec![0u32; self.ring.nvars()];
        let mut coeff = 1 % p;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let k = self.integer(p)?;
                    coeff = self.ring.mul(coeff, k);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let at = self.pos;
                    let name = self.identifier()?;
                    let Some(i) = self.ring.variable_index(&name) else {
                        self.pos = at;
                        return self.err(format!("undeclared variable `{name}`"));
                    };
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let k = self.integer(0)?;
                        e = match u32::try_from(k) {
                            Ok(e) => e,
                            Err(_) => return self.err("exponent too large"),
                        };
                    }
                    exps[i] += e;
                }
                Some(c) => return self.err(format!("unexpected `{c}`")),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((ExponentVector::new(exps), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut negate = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negate = c == '-';
            self.pos += 1;
        }
        loop {
            let (u, c) = self.term()?;
            terms.push((u, if negate { self.ring.neg(c) } else { c }));
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                None => break,
                Some(c) => return self.err(format!("unexpected `{c}`")),
            }
            self.pos += 1;
        }
        Polynomial::from_terms(self.ring, terms)
    }
}

/// Parse `text` as a polynomial of `ring`.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let mut parser = Parser { ring, chars: text.chars().collect(), pos: 0 };
    if parser.peek().is_none() {
        return parser.err("empty polynomial");
    }
    parser.polynomial()
}
