//! Canonical text format for polynomials.
//!
//! Printing lists terms in graded-lex descending order. Real coefficients
//! have their sign pulled out into the `+`/`-` separators, pure imaginary
//! coefficients print as `3i`, `1/2i` or `i`, and coefficients with both
//! parts are parenthesised: `(1/2+3i)*z1^2*z2 - z3^3 + 5`.
//!
//! The parser accepts the usual infix grammar over `+ - * / ^` and
//! parentheses, ignoring whitespace. A numeric literal is `p` or `p/q`
//! optionally followed by `i`, and the suffix applies to the whole literal,
//! so `1/2i` means `(1/2)·i`. Division is only allowed by nonzero constants.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::GaussianRational;
use crate::poly::{Monomial, Polynomial};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "z{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        write_monomial(f, self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            // Sign is extracted only when one component is zero.
            let (negative, body) = if c.im().is_zero() {
                (c.re().is_negative(), GaussianRational::from(c.re().abs()))
            } else if c.re().is_zero() {
                (
                    c.im().is_negative(),
                    GaussianRational::new(BigRational::zero(), c.im().abs()),
                )
            } else {
                (false, c.clone())
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let complex = !body.re().is_zero() && !body.im().is_zero();
            if m.degree() == 0 {
                if complex {
                    write!(f, "({body})")?;
                } else {
                    write!(f, "{body}")?;
                }
                continue;
            }
            if complex {
                write!(f, "({body})*")?;
            } else if !body.is_one() {
                write!(f, "{body}*")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(GaussianRational),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<(usize, char)> = src
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |k: &mut usize| -> String {
        let mut s = String::new();
        while *k < chars.len() && chars[*k].1.is_ascii_digit() {
            s.push(chars[*k].1);
            *k += 1;
        }
        s
    };
    while k < chars.len() {
        let (off, c) = chars[k];
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'i' => Tok::Num(GaussianRational::i()),
            'z' => {
                k += 1;
                let d = digits(&mut k);
                if d.is_empty() {
                    return Err(perr(off, "expected variable index after `z`"));
                }
                let idx: usize = d
                    .parse()
                    .map_err(|_| perr(off, "variable index too large"))?;
                if idx == 0 {
                    return Err(perr(off, "variables are numbered from z1"));
                }
                out.push((Tok::Var(idx - 1), off));
                continue;
            }
            d if d.is_ascii_digit() => {
                let num: BigInt = digits(&mut k).parse().unwrap();
                let mut value = BigRational::from_integer(num);
                let after_caret = matches!(out.last(), Some((Tok::Caret, _)));
                if !after_caret
                    && k + 1 < chars.len()
                    && chars[k].1 == '/'
                    && chars[k + 1].1.is_ascii_digit()
                {
                    let den_off = chars[k + 1].0;
                    k += 1;
                    let den: BigInt = digits(&mut k).parse().unwrap();
                    if den.is_zero() {
                        return Err(perr(den_off, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                let v = if k < chars.len() && chars[k].1 == 'i' {
                    k += 1;
                    GaussianRational::new(BigRational::zero(), value)
                } else {
                    GaussianRational::from(value)
                };
                out.push((Tok::Num(v), off));
                continue;
            }
            other => return Err(perr(off, format!("unexpected character `{other}`"))),
        };
        out.push((tok, off));
        k += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
    n: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.signed_term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.term()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()
            }
            _ => self.term(),
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let off = self.offset();
                    let d = self.power()?;
                    let c = d
                        .constant_value()
                        .ok_or_else(|| perr(off, "division by a non-constant"))?;
                    let inv = c.inv().ok_or_else(|| perr(off, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let off = self.offset();
        match self.peek() {
            Some(Tok::Num(v)) if v.is_real() && v.re().is_integer() => {
                let e: u32 = v
                    .re()
                    .numer()
                    .try_into()
                    .map_err(|_| perr(off, "exponent out of range"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(perr(off, "expected a non-negative integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let off = self.offset();
        let Some((tok, _)) = self.toks.get(self.pos) else {
            return Err(perr(off, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Num(v) => Ok(Polynomial::constant(self.n, v.clone())),
            Tok::Var(i) => Polynomial::var(self.n, *i),
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(perr(self.offset(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Minus => Ok(-&self.power()?),
            other => Err(perr(off, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses a polynomial.
///
/// With `n = None` the variable count is the largest index used (at least
/// one); with `Some(n)` any `z_k` with `k > n` is an error.
pub fn parse_polynomial(src: &str, n: Option<usize>) -> Result<Polynomial> {
    let toks = lex(src)?;
    let max_var = toks
        .iter()
        .filter_map(|(t, o)| match t {
            Tok::Var(i) => Some((*i, *o)),
            _ => None,
        })
        .max_by_key(|(i, _)| *i);
    let n = match (n, max_var) {
        (Some(n), Some((i, off))) if i >= n => {
            return Err(perr(
                off,
                format!("z{} exceeds the declared {n} variables", i + 1),
            ));
        }
        (Some(0), _) => return Err(perr(0, "variable count must be at least 1")),
        (Some(n), _) => n,
        (None, Some((i, _))) => i + 1,
        (None, None) => 1,
    };
    if toks.is_empty() {
        return Err(perr(src.len(), "empty input"));
    }
    let mut parser = Parser {
        toks: &toks,
        pos: 0,
        end: src.len(),
        n,
    };
    let p = parser.expr()?;
    if parser.pos < toks.len() {
        return Err(perr(parser.offset(), "unexpected trailing input"));
    }
    Ok(p)
}

/// Parses a comma-separated point such as `1,i,-1/2+3i`.
pub fn parse_point(src: &str) -> Result<Vec<GaussianRational>> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in src.split(',') {
        let p = parse_polynomial(part, Some(1)).map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + start,
                message,
            },
            e => e,
        })?;
        let c = p
            .constant_value()
            .ok_or_else(|| perr(start, "point coordinates must be constants"))?;
        out.push(c);
        start += part.len() + 1;
    }
    Ok(out)
}

/// Canonical text of a point, comma separated.
pub fn format_point(point: &[GaussianRational]) -> String {
    point
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
