use super::fraction::RatFunc;
use crate::error::{Error, Result};
use num::bigint::BigInt;

/// Parse expressions over q such as "q^2 + 1 - 3/2*q^-1" or
/// "(1 - q^2)/(1 - q^4)". The grammar is sum > product (with / at the same
/// level as *) > unary minus > atom, so everything the Display impls print
/// round-trips.
pub fn parse_ratfunc(input: &str) -> Result<RatFunc> {
    let tokens = tokenize(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at token {}",
            p.pos
        )));
    }
    Ok(value)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Q,
    Caret,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            'q' => {
                out.push(Tok::Q);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                let n = BigInt::parse_bytes(digits.as_bytes(), 10)
                    .ok_or_else(|| Error::Parse(format!("bad integer {digits:?}")))?;
                out.push(Tok::Int(n));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<RatFunc> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RatFunc> {
        let mut acc = self.signed_atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.signed_atom()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.signed_atom()?;
                    if d.is_zero() {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    acc = &acc / &d;
                }
                // Juxtaposition like "3q^2" or "2(q+1)" multiplies.
                Some(Tok::Q) | Some(Tok::Int(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.signed_atom()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_atom(&mut self) -> Result<RatFunc> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.signed_atom()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(RatFunc::from(n)),
            Some(Tok::Q) => {
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let e = self.exponent()?;
                    Ok(RatFunc::q_pow(e))
                } else {
                    Ok(RatFunc::q_pow(1))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.sum()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Int(n)) => {
                let e: i64 = n
                    .try_into()
                    .map_err(|_| Error::Parse("exponent out of range".into()))?;
                Ok(if negative { -e } else { e })
            }
            other => Err(Error::Parse(format!("bad exponent token {other:?}"))),
        }
    }
}
