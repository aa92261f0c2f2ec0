use num_traits::One;

use super::poly::{MultiPoly, VarSet};
use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Parses polynomial expressions in the style used throughout the tables:
/// sums of juxtaposed monomials such as `1/12x1^2+2/3x1+1`, with optional
/// explicit `*`, parentheses and unary minus.
pub fn parse_poly(vars: &VarSet, input: &str) -> Result<MultiPoly> {
    let mut p = Parser { vars, toks: tokenize(input)?, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{input}`")));
    }
    Ok(e)
}

pub fn parse_rational(input: &str) -> Result<Rational> {
    let p = parse_poly(&VarSet::empty(), input.trim())?;
    if !p.is_constant() {
        return Err(Error::Parse(format!("`{input}` is not a rational constant")));
    }
    Ok(p.constant_term())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: Integer = bytes[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|e| Error::Parse(format!("{e}")))?;
                let mut den = Integer::one();
                if i < bytes.len() && bytes[i] == '/' {
                    // A fraction only if followed by digits.
                    let mut j = i + 1;
                    let dstart = j;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j > dstart {
                        den = bytes[dstart..j]
                            .iter()
                            .collect::<String>()
                            .parse()
                            .map_err(|e| Error::Parse(format!("{e}")))?;
                        i = j;
                    }
                }
                if den == Integer::from(0) {
                    return Err(Error::Parse(format!("zero denominator near byte {i}")));
                }
                toks.push(Tok::Num(Rational::new(num, den)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(bytes[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    vars: &'a VarSet,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    /// Juxtaposed variables lex as one identifier (`x1x2`); split greedily
    /// into known variable names and multiply.
    fn split_idents(&self, name: &str) -> Result<MultiPoly> {
        if let Ok(p) = MultiPoly::var(self.vars, name) {
            return Ok(p);
        }
        let mut acc = MultiPoly::one(self.vars);
        let mut rest = name;
        while !rest.is_empty() {
            let hit = self
                .vars
                .names()
                .iter()
                .filter(|v| rest.starts_with(v.as_str()))
                .max_by_key(|v| v.len());
            match hit {
                Some(v) => {
                    acc = acc.mul(&MultiPoly::var(self.vars, v).unwrap());
                    rest = &rest[v.len()..];
                }
                None => return Err(Error::Parse(format!("unknown variable `{name}`"))),
            }
        }
        Ok(acc)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        while let Some(t) = self.peek() {
            match t {
                Tok::Minus => {
                    negate = !negate;
                    self.pos += 1;
                }
                Tok::Plus => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(t) = self.peek().cloned() {
            match t {
                Tok::Plus | Tok::Minus => {
                    let mut neg = false;
                    while let Some(t2) = self.peek() {
                        match t2 {
                            Tok::Minus => {
                                neg = !neg;
                                self.pos += 1;
                            }
                            Tok::Plus => {
                                self.pos += 1;
                            }
                            _ => break,
                        }
                    }
                    let rhs = self.term()?;
                    acc = if neg { acc.sub(&rhs) } else { acc.add(&rhs) };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    /// A product of factors, with `*` optional (juxtaposition).
    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = match self.next() {
            Some(Tok::Num(r)) => MultiPoly::constant(self.vars, r),
            Some(Tok::Ident(name)) => self.split_idents(&name)?,
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => e,
                    _ => return Err(Error::Parse("expected `)`".into())),
                }
            }
            Some(Tok::Minus) => {
                let f = self.factor()?;
                f.neg()
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(r)) if r.is_integer() && r >= Rational::from_integer(0.into()) => {
                    let n: u32 = r
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(base.pow(n))
                }
                _ => Err(Error::Parse("expected nonnegative integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn parses_table_style() {
        let v = VarSet::new(vec!["x1", "x2"]);
        let p = parse_poly(&v, "-1/2x1^2 - x1x2 + 3").unwrap();
        assert_eq!(p.eval(&[rat_int(2), rat_int(1)]), rat_int(-1));
        let q = parse_poly(&v, "(x1+2)(x1+6)").unwrap();
        assert_eq!(q, parse_poly(&v, "x1^2+8x1+12").unwrap());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rational("10").unwrap(), rat_int(10));
    }
}
