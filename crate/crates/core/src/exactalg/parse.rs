//! Parser for rational expressions in `t`, such as
//! `(1+t^30)/((1-t^12)(1-t^20))`.
//!
//! Supports `+ - * /`, nonnegative integer powers (`^` or `**`), integer
//! literals, parentheses and implicit multiplication by juxtaposition.

use num_bigint::BigInt;

use super::{Polynomial, Rational, RationalFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    T,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            't' => out.push(Tok::T),
            '+' => out.push(Tok::Plus),
            '-' | '\u{2212}' => out.push(Tok::Minus),
            '*' if chars.get(i + 1) == Some(&'*') => {
                i += 1;
                out.push(Tok::Caret);
            }
            '*' | '\u{b7}' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    acc = acc.div(&d)?;
                }
                Some(Tok::LParen | Tok::T | Tok::Num(_)) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let e = match self.bump() {
                Some(Tok::Num(n)) => u32::try_from(n)
                    .map_err(|_| Error::Parse("exponent too large".into()))?,
                other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            };
            let mut acc = RationalFunction::from_poly(Polynomial::one());
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(RationalFunction::from_rational(Rational::from_integer(n))),
            Some(Tok::T) => Ok(RationalFunction::from_poly(Polynomial::t())),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("missing ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_rational_function(s: &str) -> Result<RationalFunction> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            p.pos + 1
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn parses_products_of_binomials() {
        let f = parse_rational_function("(1+t^30)/((1-t^12)(1-t^20))").unwrap();
        let num = Polynomial::from_terms([(0, int(1)), (30, int(1))]);
        let den = Polynomial::one_minus_t_pow(12).mul(&Polynomial::one_minus_t_pow(20));
        assert_eq!(f, RationalFunction::new(num, den).unwrap());
    }

    #[test]
    fn juxtaposition_and_unary_minus() {
        let f = parse_rational_function("-2t^3 + 3*t - 1/2").unwrap();
        let want = Polynomial::from_terms([(0, crate::exactalg::rat(-1, 2)), (1, int(3)), (3, int(-2))]);
        assert_eq!(f, RationalFunction::from_poly(want));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational_function("1+").is_err());
        assert!(parse_rational_function("(1+t").is_err());
        assert!(parse_rational_function("x").is_err());
        assert_eq!(parse_rational_function("1/(t-t)"), Err(Error::DivisionByZero));
    }
}
