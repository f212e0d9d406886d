//! Polynomial expression parser: integer literals, declared variable names,
//! `+ - * ^` and parentheses. No implicit multiplication.

use crate::ambient::Ambient;
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::GradedPolynomial;
use num_bigint::BigInt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let literal: String = chars[start..i].iter().collect();
                let value = BigInt::from_str(&literal)
                    .map_err(|_| Error::Parse(format!("bad integer `{literal}`")))?;
                tokens.push(Token::Int(value));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` at byte {i}"
                )))
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a, C: Coeff> {
    ambient: &'a Arc<Ambient>,
    tokens: Vec<Token>,
    pos: usize,
    _marker: std::marker::PhantomData<C>,
}

impl<'a, C: Coeff> Parser<'a, C> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<GradedPolynomial<C>> {
        let mut negate_first = false;
        if matches!(self.peek(), Some(Token::Minus)) {
            self.next();
            negate_first = true;
        }
        let mut total = self.term()?;
        if negate_first {
            total = total.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    total = total.try_add(&t)?;
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    total = total.try_sub(&t)?;
                }
                _ => return Ok(total),
            }
        }
    }

    fn term(&mut self) -> Result<GradedPolynomial<C>> {
        let mut product = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.next();
            let f = self.factor()?;
            product = product.try_mul(&f)?;
        }
        Ok(product)
    }

    fn factor(&mut self) -> Result<GradedPolynomial<C>> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.next();
            match self.next() {
                Some(Token::Int(k)) => {
                    let exp = u32::try_from(&k)
                        .map_err(|_| Error::Parse(format!("exponent `{k}` out of range")))?;
                    Ok(base.pow(exp))
                }
                other => Err(Error::Parse(format!(
                    "expected integer exponent after `^`, found {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GradedPolynomial<C>> {
        match self.next() {
            Some(Token::Int(v)) => Ok(GradedPolynomial::constant(
                self.ambient,
                C::from_integer(&v),
            )),
            Some(Token::Ident(name)) => GradedPolynomial::var(self.ambient, &name),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!(
                "expected integer, variable or `(`, found {other:?}"
            ))),
        }
    }
}

/// Parse an expression in the ambient's variables.
pub fn parse_polynomial<C: Coeff>(
    ambient: &Arc<Ambient>,
    text: &str,
) -> Result<GradedPolynomial<C>> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser::<C> {
        ambient,
        tokens,
        pos: 0,
        _marker: std::marker::PhantomData,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input from token {}",
            parser.pos
        )));
    }
    Ok(poly)
}
