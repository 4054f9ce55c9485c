//! Text grammar: terms `c*t^e`, `c`, `t^e` or `t` joined by `+`/`-`.
//! `c` is an integer or `p/q`, `e` a possibly negative integer, and
//! whitespace is ignored. `−` (U+2212) is accepted as a minus sign.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{LaurentPoly, PrimitiveRep};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    input: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        let chars = input
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        Cursor { chars, pos: 0, input }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse { input: self.input.to_string(), reason: reason.into() }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&s).ok()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        if paren && !self.eat(')') {
            return Err(self.err("unbalanced parenthesis in exponent"));
        }
        let v: i64 = d.try_into().map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn term(&mut self) -> Result<(i64, BigRational)> {
        let mut coeff = None;
        if let Some(n) = self.digits() {
            let mut c = BigRational::from_integer(n);
            if self.eat('/') {
                let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                c /= BigRational::from_integer(d);
            }
            coeff = Some(c);
        }
        let star = self.eat('*');
        let mut exp = 0;
        let has_var = self.eat('t');
        if has_var {
            exp = 1;
            if self.eat('^') {
                exp = self.signed_int()?;
            }
        } else if star {
            return Err(self.err("expected `t` after `*`"));
        }
        if coeff.is_none() && !has_var {
            return Err(self.err(format!("unexpected token at offset {}", self.pos)));
        }
        Ok((exp, coeff.unwrap_or_else(BigRational::one)))
    }
}

/// Two digit runs separated only by whitespace, as in `3 4`.
fn split_digits(input: &str) -> bool {
    let mut prev_digit = false;
    let mut gap = false;
    for c in input.chars() {
        if c.is_whitespace() {
            gap = prev_digit;
            continue;
        }
        if c.is_ascii_digit() && gap {
            return true;
        }
        prev_digit = c.is_ascii_digit();
        gap = false;
    }
    false
}

pub fn parse_laurent(input: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor::new(input);
    if split_digits(input) {
        return Err(cur.err("whitespace inside a number"));
    }
    if cur.chars.is_empty() {
        return Err(cur.err("empty input"));
    }
    let mut terms = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else if first {
            false
        } else {
            return Err(cur.err(format!("expected `+` or `-` at offset {}", cur.pos)));
        };
        first = false;
        let (e, c) = cur.term()?;
        terms.push((e, if neg { -c } else { c }));
    }
    Ok(LaurentPoly::from_terms(terms))
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

impl FromStr for PrimitiveRep {
    type Err = Error;
    /// Parses and normalizes; the zero polynomial is rejected.
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)?.normalize()
    }
}
