//! Polynomial expressions over F_q[t].
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' UINT)*
//! atom   := INT | 't' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and integers are reduced mod q. Output goes through
//! `Display` on [`Poly`], which this grammar reads back unchanged.

use std::fmt;

use qforms_core::{Fq, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    /// 1-based column of the offending character (one past the end for
    /// unexpected end of input).
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at column {}", self.message, self.column)
    }
}

impl std::error::Error for ParseError {}

/// Largest degree an exponent may produce.
const MAX_DEGREE: u64 = 1 << 16;

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    field: Fq,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { message: message.into(), column: self.column() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        let mut base = self.atom()?;
        while self.eat('^') {
            let exp = self.digits("exponent")?;
            let exp: u64 = exp.parse().or_else(|_| self.error("exponent too large"))?;
            if base.degree().unwrap_or(0) as u64 * exp > MAX_DEGREE {
                return self.error("exponent too large");
            }
            base = base.pow(exp);
        }
        Ok(base)
    }

    fn digits(&mut self, what: &str) -> Result<String, ParseError> {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.pos += 1;
        }
        if out.is_empty() {
            return self.error(format!("expected {what}"));
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(Poly::t(self.field))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let text = self.digits("integer")?;
                let q = self.field.q() as u128;
                // reduce digit by digit so any length is accepted
                let value = text.bytes().fold(0u128, |acc, b| (acc * 10 + (b - b'0') as u128) % q);
                Ok(Poly::constant(self.field, value as u32))
            }
            Some(c) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }
}

pub fn parse_poly(src: &str, field: Fq) -> Result<Poly, ParseError> {
    let chars: Vec<(usize, char)> =
        src.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, c)| (i + 1, c)).collect();
    let end = src.chars().count() + 1;
    let mut parser = Parser { chars, pos: 0, field, end };
    let poly = parser.expr()?;
    if parser.pos < parser.chars.len() {
        let c = parser.peek().expect("in range");
        return parser.error(format!("unexpected '{c}'"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Fq {
        Fq::new(3).unwrap()
    }

    #[test]
    fn examples() {
        let c = parse_poly("-(t^3 - t^2 + 1)", f3()).unwrap();
        assert_eq!(c, Poly::from_i64(f3(), &[2, 0, 1, 2]));
        assert_eq!(c.to_string(), "2*t^3+t^2+2");
        assert!(parse_poly("0", f3()).unwrap().is_zero());
        let d = parse_poly("(t-1)*(t^2-t-1)", f3()).unwrap();
        assert_eq!(d, Poly::from_i64(f3(), &[1, 0, 1, 1]));
        assert_eq!(parse_poly("t - 1", f3()).unwrap().to_string(), "t+2");
    }

    #[test]
    fn precedence() {
        let f = parse_poly("-t^2", f3()).unwrap();
        assert_eq!(f, Poly::from_i64(f3(), &[0, 0, -1]));
        let f = parse_poly("2*t^2^2 + 10", f3()).unwrap();
        assert_eq!(f, Poly::from_i64(f3(), &[1, 0, 0, 0, 2]));
        let f = parse_poly("(t+1)^3", f3()).unwrap();
        assert_eq!(f, Poly::from_i64(f3(), &[1, 0, 0, 1]));
        let f = parse_poly("123456789012345678901234567890", f3()).unwrap();
        assert!(f.is_zero());
        assert!(parse_poly("t^100000", f3()).is_err());
        assert!(parse_poly("2^100000", f3()).unwrap().is_one());
    }

    #[test]
    fn error_columns() {
        assert_eq!(parse_poly("t +", f3()).unwrap_err().column, 4);
        assert_eq!(parse_poly("t + x", f3()).unwrap_err().column, 5);
        assert_eq!(parse_poly("(t+1", f3()).unwrap_err().column, 5);
        assert_eq!(parse_poly("2t", f3()).unwrap_err().column, 2);
        assert_eq!(parse_poly("t^", f3()).unwrap_err().column, 3);
        assert_eq!(parse_poly("", f3()).unwrap_err().column, 1);
    }
}
