//! Canonical text form and a small expression parser.
//!
//! Terms print in descending graded-lex order, coefficients as `num/den`
//! integers, variables as `t1..tN`, e.g. `3*t1^2*t2 - 1/2*t3`. The parser
//! accepts the same grammar plus parentheses and arbitrary single-letter
//! variable prefixes, so `(t3-t1)*(t4-t2)` and `u1+u2` both read back.

use super::{Coeff, Monomial, MultiPoly};
use crate::error::PolyError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub(crate) fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(m: &Monomial, prefix: char) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("{prefix}{}", i + 1)),
            _ => parts.push(format!("{prefix}{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl MultiPoly {
    /// Canonical text form with a chosen variable letter.
    pub fn to_text_with(&self, prefix: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            let mono = format_monomial(m, prefix);
            let coeff_part = if mono.is_empty() {
                format_coeff(&mag)
            } else if mag.is_one() {
                mono.clone()
            } else {
                format!("{}*{}", format_coeff(&mag), mono)
            };
            if idx == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&coeff_part);
        }
        out
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text_with('t'))
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse(format!("{msg} at position {} in {:?}", self.pos, self.src))
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

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        BigInt::from_str(&s).map_err(|e| self.error(&e.to_string()))
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut negate = false;
        if let Some(c) = self.peek() {
            if c == '+' || c == '-' {
                self.bump();
                negate = c == '-';
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                '-' => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                // Implicit product before a parenthesis or a variable.
                Some('(') => acc = acc.try_mul(&self.factor()?)?,
                Some(c) if c.is_ascii_alphabetic() => acc = acc.try_mul(&self.factor()?)?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.integer()?;
            let e: usize = e
                .try_into()
                .map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.integer()?;
                let denom = if self.peek() == Some('/') {
                    self.bump();
                    self.integer()?
                } else {
                    BigInt::one()
                };
                if denom.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                Ok(MultiPoly::constant(
                    self.nvars,
                    Coeff::new(numer, denom),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.bump();
                let idx = self.integer()?;
                let idx: usize = idx
                    .try_into()
                    .map_err(|_| self.error("variable index out of range"))?;
                if idx == 0 || idx > self.nvars {
                    return Err(self.error(&format!(
                        "variable index {idx} outside 1..={}",
                        self.nvars
                    )));
                }
                Ok(MultiPoly::var(self.nvars, idx - 1))
            }
            _ => Err(self.error("expected factor")),
        }
    }
}

/// Parse the canonical text form (any single-letter variable prefix).
pub fn parse_poly(src: &str, nvars: usize) -> Result<MultiPoly, PolyError> {
    let mut p = Parser {
        chars: src.chars().collect(),
        pos: 0,
        nvars,
        src,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_canonical_example() {
        let q = parse_poly("3*t1^2*t2 - 1/2*t3", 3).unwrap();
        assert_eq!(q.to_string(), "3*t1^2*t2 - 1/2*t3");
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(parse_poly("t1 - t1", 2).unwrap().to_string(), "0");
    }

    #[test]
    fn roundtrip_through_text() {
        let q = parse_poly("(t3-t1)*(t4-t2) - 5/3 + t2^4", 4).unwrap();
        let back = parse_poly(&q.to_string(), 4).unwrap();
        assert_eq!(q, back);
    }

    #[test]
    fn rejects_out_of_range_variable() {
        assert!(parse_poly("t5", 4).is_err());
        assert!(parse_poly("t0", 4).is_err());
    }

    #[test]
    fn descending_graded_order() {
        let q = parse_poly("t1 + t1^2*t2 + 1", 2).unwrap();
        assert_eq!(q.to_string(), "t1^2*t2 + t1 + 1");
    }
}
