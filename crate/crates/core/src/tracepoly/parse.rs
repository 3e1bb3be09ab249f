//! Text form of trace polynomials.
//!
//! ```text
//! poly   := ws sign? term (ws ('+' | '-') ws term)* ws
//! term   := factor (ws '*' ws factor)*
//! factor := (number | var) (ws '^' ws digits)?
//! var    := 't' ws '[' ws digits (ws ',' ws digits){0,2} ws ']'
//! number := digits ('/' digits)? | digits '.' digits
//! ```
//! Indices inside brackets must be strictly increasing and 1-based.

use num_rational::BigRational;
use num_traits::One;

use super::index::Monomial;
use super::poly::TracePolynomial;
use crate::error::{Error, Result};
use crate::scalar::parse_rational;

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(syntax(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).expect("ASCII digits"))
    }

    fn small_int(&mut self) -> Result<usize> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| syntax(start, "integer out of range"))
    }

    fn number(&mut self) -> Result<BigRational> {
        let start = self.pos;
        self.digits()?;
        if self.peek() == Some(b'/') || self.peek() == Some(b'.') {
            self.pos += 1;
            self.digits()?;
        }
        let text = std::str::from_utf8(&self.text[start..self.pos]).expect("ASCII");
        parse_rational(text).ok_or_else(|| syntax(start, format!("invalid number {text:?}")))
    }

    fn var(&mut self) -> Result<Monomial> {
        let start = self.pos;
        self.pos += 1; // 't'
        self.expect(b'[')?;
        let mut idx = Vec::new();
        loop {
            self.skip_ws();
            idx.push(self.small_int()?);
            self.skip_ws();
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(syntax(self.pos, "expected ',' or ']'")),
            }
        }
        let bad = |msg: &str| Error::Index(format!("{msg} in variable at offset {start}"));
        if idx.contains(&0) {
            return Err(bad("indices are 1-based"));
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("indices must be strictly increasing"));
        }
        match *idx.as_slice() {
            [i] => Ok(Monomial { i: vec![i], ..Monomial::one() }),
            [i, j] => Ok(Monomial { k: vec![(i, j)], ..Monomial::one() }),
            [i, j, k] => Ok(Monomial { l: vec![(i, j, k)], ..Monomial::one() }),
            _ => Err(syntax(start, "variables take one, two or three indices")),
        }
    }

    fn factor(&mut self) -> Result<(BigRational, Monomial)> {
        self.skip_ws();
        let (c, m) = match self.peek() {
            Some(b't') => (BigRational::one(), self.var()?),
            Some(c) if c.is_ascii_digit() => (self.number()?, Monomial::one()),
            Some(c) => return Err(syntax(self.pos, format!("unexpected '{}'", c as char))),
            None => return Err(syntax(self.pos, "unexpected end of input")),
        };
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.small_int()?;
            let e32 = u32::try_from(e).map_err(|_| syntax(self.pos, "exponent too large"))?;
            let mut mm = Monomial::one();
            for _ in 0..e {
                mm = mm.mul(&m);
            }
            return Ok((num_traits::pow(c, e32 as usize), mm));
        }
        self.pos = save;
        Ok((c, m))
    }

    fn term(&mut self) -> Result<(BigRational, Monomial)> {
        let (mut c, mut m) = self.factor()?;
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.peek() != Some(b'*') {
                self.pos = save;
                return Ok((c, m));
            }
            self.pos += 1;
            let (c2, m2) = self.factor()?;
            c *= c2;
            m = m.mul(&m2);
        }
    }
}

/// Parses the text form; errors carry byte offsets.
pub fn parse_poly(text: &str) -> Result<TracePolynomial> {
    let mut p = Parser {
        text: text.as_bytes(),
        pos: 0,
    };
    let mut out = TracePolynomial::zero();
    p.skip_ws();
    if p.peek().is_none() {
        return Err(syntax(0, "empty polynomial"));
    }
    let mut sign = BigRational::one();
    match p.peek() {
        Some(b'-') => {
            sign = -sign;
            p.pos += 1;
        }
        Some(b'+') => p.pos += 1,
        _ => {}
    }
    loop {
        let (c, m) = p.term()?;
        out.add_term(m, sign * c);
        p.skip_ws();
        match p.peek() {
            None => return Ok(out),
            Some(b'+') => sign = BigRational::one(),
            Some(b'-') => sign = -BigRational::one(),
            Some(c) => return Err(syntax(p.pos, format!("unexpected '{}'", c as char))),
        }
        p.pos += 1;
    }
}

/// Canonical text form; `parse_poly(&format_poly(p)) == p`.
pub fn format_poly(p: &TracePolynomial) -> String {
    p.to_string()
}
