//! Text syntax: `X2^3 - X0*X3^2`, `*` optional, parentheses allowed.

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::RingRef;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Tok::Num(chars[start..i].iter().collect()));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character `{other}` in `{s}`"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.src))
    }

    // expr := ['-'] term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            neg = true;
            self.pos += 1;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (['*'|'/'] factor)*   (juxtaposition multiplies)
    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    if !(f.is_unit()) {
                        return Err(self.err("division by a non-constant"));
                    }
                    let inv = self.ring.field().inv(&f.terms()[0].0).unwrap();
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ['^' int]
    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.parse().map_err(|_| self.err("exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(Error::Overflow(format!("exponent {e} in `{}`", self.src)));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected an exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let v: BigInt = n.parse().map_err(|_| self.err("bad number"))?;
                Ok(Polynomial::constant(
                    self.ring,
                    self.ring.field().from_bigint(&v),
                ))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let i = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| self.err(&format!("unknown variable `{name}`")))?;
                Ok(Polynomial::monomial(
                    self.ring,
                    self.ring.field().one(),
                    Monomial::var_power(self.ring.nvars(), i, 1),
                ))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

pub(super) fn parse_polynomial<F: Field>(ring: &RingRef<F>, s: &str) -> Result<Polynomial<F>> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        src: s,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::ring::{PolyRing, PrimeField, Rationals};

    #[test]
    fn round_trips_through_display() {
        let r = PolyRing::standard(PrimeField::default(), 4);
        for s in ["X2^3 - X0*X3^2", "X1^2*X2 - X0^2*X3", "-X0 + 5", "0"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn implicit_multiplication_and_parentheses() {
        let r = PolyRing::standard(Rationals, 3);
        let a = r.parse("2 X0 X1^2").unwrap();
        let b = r.parse("2*X0*X1^2").unwrap();
        assert_eq!(a, b);
        let c = r.parse("(X0 + X1)^2 - X0^2 - X1^2").unwrap();
        assert_eq!(c, r.parse("2*X0*X1").unwrap());
        assert_eq!(r.parse("X0/2").unwrap().to_string(), "1/2*X0");
    }

    #[test]
    fn rejects_garbage() {
        let r = PolyRing::standard(PrimeField::default(), 2);
        assert!(r.parse("X5").is_err());
        assert!(r.parse("X0^").is_err());
        assert!(r.parse("X0 + ").is_err());
        assert!(r.parse("X0 $ X1").is_err());
    }
}
