//! Recursive-descent parser for interval-set expressions.
//!
//! ```text
//! setexpr  := interval (',' interval)*
//! interval := '[' scalar ',' scalar ')'
//! scalar   := ['-'] (int | int '/' int)? 'pi'
//! ```
//!
//! Whitespace between tokens is ignored. An input that is entirely whitespace
//! parses as the empty set, so every canonical form round-trips.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, RationalPi};

pub fn parse_set(text: &str) -> Result<IntervalSet> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.at_end() {
        return Ok(IntervalSet::empty());
    }
    let mut raw = vec![p.interval()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        p.expect(b',')?;
        raw.push(p.interval()?);
    }
    Ok(IntervalSet::normalize(raw))
}

pub fn parse_scalar(text: &str) -> Result<RationalPi> {
    let mut p = Parser::new(text);
    let x = p.scalar()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("trailing input after scalar"));
    }
    Ok(x)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(self.error(format!("expected `{}`, found `{}`", c as char, got as char))),
            None => Err(self.error(format!("expected `{}`, found end of input", c as char))),
        }
    }

    fn interval(&mut self) -> Result<Interval> {
        self.expect(b'[')?;
        let start = self.pos;
        let lo = self.scalar()?;
        self.expect(b',')?;
        let hi = self.scalar()?;
        self.expect(b')')?;
        Interval::new(lo, hi).map_err(|e| match e {
            Error::EmptyInterval { lo, hi } => Error::Parse {
                position: start,
                message: format!("empty interval [{lo},{hi})"),
            },
            other => other,
        })
    }

    fn scalar(&mut self) -> Result<RationalPi> {
        self.skip_ws();
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let (num, den) = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.int()?;
            self.skip_ws();
            if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let den = self.int()?;
                if den.is_zero() {
                    return Err(Error::Parse {
                        position: at,
                        message: "zero denominator".into(),
                    });
                }
                (num, den)
            } else {
                (num, BigInt::from(1))
            }
        } else {
            (BigInt::from(1), BigInt::from(1))
        };
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"pi") {
            self.pos += 2;
        } else {
            return Err(self.error("expected `pi`"));
        }
        let num = if negative { -num } else { num };
        Ok(RationalPi::new(num, den))
    }

    fn int(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits parse"))
    }
}
