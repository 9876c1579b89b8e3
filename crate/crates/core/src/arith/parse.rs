//! Parser for the textual rational-function syntax: integers, `t`, `+ - * /`,
//! `^` with an integer exponent, parentheses.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | 't' | '(' expr ')'
//! ```

use num_bigint::BigInt;

use super::ratfunc::RationalFunction;
use super::rational::Rational;
use super::ArithError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> ArithError {
    ArithError::Parse { position, message: message.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction, ArithError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, ArithError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs).map_err(|_| err(at, "division by zero"))?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, ArithError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction, ArithError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let at = self.pos;
        let e = self.integer()?;
        let e: u32 = e.try_into().map_err(|_| err(at, "exponent too large"))?;
        let mut out = RationalFunction::one();
        for _ in 0..e {
            out = &out * &base;
        }
        if neg {
            out = out.recip().map_err(|_| err(at, "zero to a negative power"))?;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Result<BigInt, ArithError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected an integer"));
        }
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(err(self.pos, "decimal input is not accepted, use p/q"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RationalFunction, ArithError> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok(RationalFunction::t())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(Rational::from_integer(n)))
            }
            Some(c) => Err(err(self.pos, format!("unexpected character {:?}", c as char))),
            None => Err(err(self.pos, "unexpected end of input")),
        }
    }
}

/// Parses a rational function in `t`. Errors carry the byte offset.
pub fn parse_rf(s: &str) -> Result<RationalFunction, ArithError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(err(p.pos, format!("unexpected character {:?}", c as char)));
    }
    Ok(out)
}
