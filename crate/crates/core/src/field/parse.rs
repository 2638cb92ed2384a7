//! Text syntax for polynomials and rational functions in `u`, `v`.
//!
//! Accepts sums and products of `u`, `v`, integer constants (read modulo 2),
//! powers `x^n`, quotients and parentheses, e.g. `u^2*v + u + 1` or
//! `(u + 1) / (v^3 + u)`. `-` is accepted and means `+`.

use super::elem::LElem;
use super::poly::BivarPolyGF2;
use super::FieldError;
use crate::scalar::Field;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> FieldError {
        FieldError::Parse { input: self.src.to_string(), pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64, FieldError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos].parse().map_err(|_| self.err("expected an integer"))
    }

    fn expr(&mut self) -> Result<LElem, FieldError> {
        let mut acc = self.term()?;
        while let Some(b'+' | b'-') = self.peek() {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LElem, FieldError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.power()?;
                    acc = acc.try_div(&d).map_err(|_| FieldError::Parse {
                        input: self.src.to_string(),
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<LElem, FieldError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.number()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<LElem, FieldError> {
        match self.peek() {
            Some(b'u') => {
                self.pos += 1;
                Ok(LElem::u())
            }
            Some(b'v') => {
                self.pos += 1;
                Ok(LElem::v())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(if n % 2 == 1 { LElem::one() } else { LElem::zero() })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses an element of `L`.
pub fn parse_elem(src: &str) -> Result<LElem, FieldError> {
    let mut p = Parser { src, bytes: src.as_bytes(), pos: 0 };
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses a polynomial; fails when the expression has a nontrivial denominator.
pub fn parse_poly(src: &str) -> Result<BivarPolyGF2, FieldError> {
    let x = parse_elem(src)?;
    if !x.is_polynomial() {
        return Err(FieldError::Parse { input: src.to_string(), pos: 0, msg: "not a polynomial".into() });
    }
    Ok(x.num().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_display() {
        for s in ["u^2*v + u + 1", "0", "1", "u*v", "(u + 1) / (v^2 + u)", "u / v", "u^3*v^2 / (u*v + 1)"] {
            let x = parse_elem(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
    }

    #[test]
    fn constants_mod_two() {
        assert_eq!(parse_elem("3*u + 2").unwrap(), LElem::u());
        assert_eq!(parse_elem("u - u").unwrap(), LElem::zero());
    }

    #[test]
    fn errors() {
        assert!(parse_elem("u +").is_err());
        assert!(parse_elem("w").is_err());
        assert!(parse_elem("u / 0").is_err());
        assert!(parse_elem("(u").is_err());
        assert!(parse_poly("1/u").is_err());
    }
}
