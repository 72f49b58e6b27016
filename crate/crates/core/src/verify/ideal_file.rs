//! Plain-text ideal files:
//!
//! ```text
//! ring: char=32003 vars=[X0,X1,X2,X3] order=grevlex
//! gens:
//! X0*X2 - X1^2
//! X0*X3 - X1*X2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ring::{Field, MonomialOrder, PolyRing, PrimeField, Rationals};

/// An ideal read from a file, over whichever field its header names.
#[derive(Clone, Debug)]
pub enum ParsedIdeal {
    Modular(Ideal<PrimeField>),
    Rational(Ideal<Rationals>),
}

impl ParsedIdeal {
    pub fn characteristic(&self) -> u64 {
        match self {
            ParsedIdeal::Modular(i) => i.ring().characteristic(),
            ParsedIdeal::Rational(_) => 0,
        }
    }
}

struct Header {
    char: u64,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn parse_header(line: &str) -> Result<Header> {
    let rest = line
        .strip_prefix("ring:")
        .ok_or_else(|| Error::Parse(format!("expected `ring:` header, got `{line}`")))?;
    let (mut char, mut vars, mut order) = (None, None, MonomialOrder::Grevlex);
    let mut rest = rest.trim();
    while !rest.is_empty() {
        let (key, tail) = rest
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad header field `{rest}`")))?;
        let (value, tail) = if let Some(t) = tail.strip_prefix('[') {
            let (v, t) = t
                .split_once(']')
                .ok_or_else(|| Error::Parse("unterminated variable list".into()))?;
            (v, t)
        } else {
            tail.split_once(char::is_whitespace).unwrap_or((tail, ""))
        };
        match key.trim() {
            "char" => {
                char = Some(
                    value
                        .parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad characteristic `{value}`")))?,
                )
            }
            "vars" => {
                vars = Some(
                    value
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect(),
                )
            }
            "order" => {
                order = match value {
                    "grevlex" => MonomialOrder::Grevlex,
                    "lex" => MonomialOrder::Lex,
                    other => return Err(Error::Parse(format!("unsupported order `{other}`"))),
                }
            }
            other => return Err(Error::Parse(format!("unknown header field `{other}`"))),
        }
        rest = tail.trim();
    }
    Ok(Header {
        char: char.ok_or_else(|| Error::Parse("header lacks char=".into()))?,
        vars: vars.ok_or_else(|| Error::Parse("header lacks vars=[...]".into()))?,
        order,
    })
}

fn body<F: Field>(field: F, h: Header, gens: &[&str]) -> Result<Ideal<F>> {
    let ring = PolyRing::new(field, h.vars, h.order)?;
    Ideal::parse(&ring, gens)
}

pub fn parse_ideal_file(text: &str) -> Result<ParsedIdeal> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = parse_header(
        lines
            .next()
            .ok_or_else(|| Error::Parse("empty ideal file".into()))?,
    )?;
    match lines.next() {
        Some("gens:") => {}
        other => return Err(Error::Parse(format!("expected `gens:`, got {other:?}"))),
    }
    let gens: Vec<&str> = lines.collect();
    Ok(match header.char {
        0 => ParsedIdeal::Rational(body(Rationals, header, &gens)?),
        p => ParsedIdeal::Modular(body(PrimeField::new(p)?, header, &gens)?),
    })
}

pub fn read_ideal_file(path: impl AsRef<std::path::Path>) -> Result<ParsedIdeal> {
    parse_ideal_file(&std::fs::read_to_string(path)?)
}

/// The inverse of [`parse_ideal_file`] for grevlex and lex rings.
pub fn format_ideal<F: Field>(i: &Ideal<F>) -> String {
    let mut out = i.ring().header();
    out.push_str("\ngens:\n");
    for g in i.gens() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# twisted cubic\nring: char=32003 vars=[X0,X1,X2,X3] order=grevlex\ngens:\nX0*X2 - X1^2\n\nX0*X3 - X1*X2\nX1*X3 - X2^2\n";
        let ParsedIdeal::Modular(i) = parse_ideal_file(text).unwrap() else {
            panic!("wrong field")
        };
        assert_eq!(i.gens().len(), 3);
        let again = parse_ideal_file(&format_ideal(&i)).unwrap();
        let ParsedIdeal::Modular(j) = again else {
            panic!("wrong field")
        };
        assert!(i.same_as(&j));
    }

    #[test]
    fn rationals_and_errors() {
        let q =
            parse_ideal_file("ring: char=0 vars=[x,y] order=lex\ngens:\n1/2*x^2 - y\n").unwrap();
        assert_eq!(q.characteristic(), 0);
        assert!(parse_ideal_file("ring: char=4 vars=[x] order=grevlex\ngens:\nx\n").is_err());
        assert!(parse_ideal_file("ring: char=7 vars=[x]\nx\n").is_err());
        assert!(parse_ideal_file("ring: vars=[x]\ngens:\nx\n").is_err());
        assert!(parse_ideal_file("ring: char=7 vars=[x]\ngens:\nz\n").is_err());
    }
}
