//! Canonical text form and a small expression parser.
//!
//! Terms are written `c*q^a*x^b` in canonical monomial order, with unit
//! coefficients and zero exponents elided and exponent 1 written bare:
//! `x^3 + 2*q*x^2 + q^3*x`. The parser accepts that form plus parentheses
//! and integer powers of sub-expressions, e.g. `(1 - q)^2*x`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{BiPoly, RatFunc, RingError};

fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &BigInt,
    e_q: u32,
    e_x: u32,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = c.abs();
    let mut factors: Vec<String> = Vec::with_capacity(3);
    if !mag.is_one() || (e_q == 0 && e_x == 0) {
        factors.push(mag.to_string());
    }
    match e_q {
        0 => {}
        1 => factors.push("q".into()),
        e => factors.push(format!("q^{e}")),
    }
    match e_x {
        0 => {}
        1 => factors.push("x".into()),
        e => factors.push(format!("x^{e}")),
    }
    f.write_str(&factors.join("*"))
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e_q, e_x, c)) in self.terms().iter().enumerate() {
            write_term(f, c, *e_q, *e_x, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator().is_one() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn expr(&mut self) -> Result<BiPoly, RingError> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc += &self.term()?;
            } else if self.eat(b'-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, RingError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<BiPoly, RingError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e: u32 = self
                .digits()?
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BiPoly, RingError> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(BiPoly::q())
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(BiPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let d = self.digits()?;
                Ok(BiPoly::constant(d.parse::<BigInt>().unwrap()))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for BiPoly {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

impl FromStr for RatFunc {
    type Err = RingError;

    /// Accepts `num`, or `(num)/(den)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let num = p.expr()?;
        if p.eat(b'/') {
            let den = p.power()?;
            if p.peek().is_some() {
                return Err(p.err("trailing input"));
            }
            return RatFunc::new(num, den);
        }
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(RatFunc::from(num))
    }
}
