//! Textual form of polynomials over a variable array.
//!
//! Variables render as `x[1,2,1]`, monomials as `x[1,1]^2*x[2,1]` and
//! polynomials as signed term lists such as `x[1,1]*x[1,2] - 2/3*x[2,1]`.
//! [`format_polynomial`] and [`parse_polynomial`] are exact inverses on
//! canonical polynomials.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::monomial::{Monomial, VarId};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use super::scalar::{Field, Scalar};
use super::shape::{Shape, VarIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(
        "unknown variable x[{}] at {line}:{column} for shape {shape}",
        join(index)
    )]
    UnknownVariable {
        line: usize,
        column: usize,
        index: Vec<u32>,
        shape: String,
    },
    #[error("zero denominator at {line}:{column}")]
    ZeroDenominator { line: usize, column: usize },
}

fn join(index: &[u32]) -> String {
    index
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn format_monomial(m: &Monomial, shape: &Shape) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (k, &(v, e)) in m.exponents().iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        write!(out, "{}", shape.var_index(v)).unwrap();
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    out
}

pub fn format_polynomial(p: &Polynomial, shape: &Shape) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, m)) in p.terms().iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = if negative { c.neg() } else { c.clone() };
        if m.is_one() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&format_monomial(m, shape));
        } else {
            write!(out, "{abs}*{}", format_monomial(m, shape)).unwrap();
        }
    }
    out
}

/// Parses a polynomial over `shape` into `field`, sorted by `order`.
pub fn parse_polynomial(
    src: &str,
    shape: &Shape,
    field: Field,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        src: src.as_bytes(),
        pos: 0,
        shape,
    };
    let terms = parser.polynomial()?;
    let mut scalars = Vec::with_capacity(terms.len());
    for (q, m, at) in terms {
        let c = field.from_rational(&q).map_err(|_| {
            let (line, column) = parser.line_col(at);
            ParseError::ZeroDenominator { line, column }
        })?;
        scalars.push((c, m));
    }
    Ok(Polynomial::from_terms(field, order, scalars))
}

pub fn parse_monomial(src: &str, shape: &Shape) -> Result<Monomial, ParseError> {
    let p = parse_polynomial(src, shape, Field::Rational, MonomialOrder::Grevlex)?;
    match p.terms() {
        [(c, m)] if c.is_one() => Ok(m.clone()),
        _ => Err(ParseError::Syntax {
            line: 1,
            column: 1,
            message: "expected a single monomial with coefficient 1".into(),
        }),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    shape: &'a Shape,
}

impl Parser<'_> {
    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = pos
            - before
                .iter()
                .rposition(|&b| b == b'\n')
                .map_or(0, |i| i + 1)
            + 1;
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.line_col(self.pos);
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn small_integer(&mut self, what: &str) -> Result<u32, ParseError> {
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| self.error(format!("{what} out of range")))
    }

    fn polynomial(&mut self) -> Result<Vec<(BigRational, Monomial, usize)>, ParseError> {
        let mut terms = Vec::new();
        self.skip_ws();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (mut q, m, at) = self.term()?;
            if negative {
                q = -q;
            }
            terms.push((q, m, at));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.error("expected '+', '-' or end of input")),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(BigRational, Monomial, usize), ParseError> {
        self.skip_ws();
        let at = self.pos;
        let mut coefficient = BigRational::one();
        let mut factors: Vec<(VarId, u32)> = Vec::new();
        let mut need_power = true;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let num = self.integer()?;
            let den = if self.eat(b'/') {
                let den_at = self.pos;
                let d = self.integer()?;
                if d.is_zero() {
                    let (line, column) = self.line_col(den_at);
                    return Err(ParseError::ZeroDenominator { line, column });
                }
                d
            } else {
                BigInt::one()
            };
            coefficient = BigRational::new(num, den);
            need_power = self.eat(b'*');
        }
        if need_power {
            factors.push(self.power()?);
            while self.eat(b'*') {
                factors.push(self.power()?);
            }
        }
        Ok((coefficient, Monomial::from_pairs(factors), at))
    }

    fn power(&mut self) -> Result<(VarId, u32), ParseError> {
        self.skip_ws();
        let at = self.pos;
        if self.peek() != Some(b'x') {
            return Err(self.error("expected a variable 'x[...]'"));
        }
        self.pos += 1;
        self.expect(b'[')?;
        let mut index = vec![self.small_integer("index")?];
        while self.eat(b',') {
            index.push(self.small_integer("index")?);
        }
        self.expect(b']')?;
        let id = self.shape.var_id(&VarIndex(index.clone())).map_err(|_| {
            let (line, column) = self.line_col(at);
            ParseError::UnknownVariable {
                line,
                column,
                index,
                shape: self.shape.to_string(),
            }
        })?;
        let exponent = if self.eat(b'^') {
            self.small_integer("exponent")?
        } else {
            1
        };
        Ok((id, exponent))
    }
}

/// Parses a rational literal such as `-3/4`.
pub fn parse_rational(src: &str) -> Option<BigRational> {
    let src = src.trim();
    let (num, den) = match src.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (src.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Renders a scalar with an explicit sign, for reports.
pub fn format_scalar(c: &Scalar) -> String {
    match c {
        Scalar::Rational(q) if q.is_negative() => format!("-{}", Scalar::Rational(-q)),
        other => other.to_string(),
    }
}
