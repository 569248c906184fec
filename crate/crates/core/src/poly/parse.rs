//! Textual polynomial syntax: `3*x^2*y + 1` with `^`, `*`, `+`, `-`.
//! Unknown variables are rejected.

use super::{Poly, PolyRingSpec};
use crate::error::{Error, Result};

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn next_tok(&mut self) -> Result<Tok> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        if self.pos >= bytes.len() {
            return Ok(Tok::End);
        }
        let c = bytes[self.pos];
        match c {
            b'+' => {
                self.pos += 1;
                Ok(Tok::Plus)
            }
            b'-' => {
                self.pos += 1;
                Ok(Tok::Minus)
            }
            b'*' => {
                self.pos += 1;
                Ok(Tok::Star)
            }
            b'^' => {
                self.pos += 1;
                Ok(Tok::Caret)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = &self.src[start..self.pos];
                text.parse::<i64>()
                    .map(Tok::Int)
                    .map_err(|_| Error::Parse(format!("integer out of range: {text}")))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Tok::Ident(self.src[start..self.pos].to_string()))
            }
            other => Err(Error::Parse(format!(
                "unexpected character {:?} at byte {}",
                other as char, self.pos
            ))),
        }
    }
}

pub fn parse_poly(ring: &PolyRingSpec, text: &str) -> Result<Poly> {
    let mut lx = Lexer::new(text);
    let mut tok = lx.next_tok()?;
    let mut acc = Poly::zero(ring);
    let mut expect_term = true;
    let mut negate = false;

    // leading sign
    loop {
        match tok {
            Tok::Plus => tok = lx.next_tok()?,
            Tok::Minus => {
                negate = !negate;
                tok = lx.next_tok()?;
            }
            _ => break,
        }
    }

    loop {
        if expect_term {
            let (term, next) = parse_term(ring, &mut lx, tok)?;
            let term = if negate { term.neg() } else { term };
            acc = acc.add(&term)?;
            tok = next;
            expect_term = false;
            negate = false;
        } else {
            match tok {
                Tok::End => break,
                Tok::Plus => {
                    tok = lx.next_tok()?;
                    expect_term = true;
                }
                Tok::Minus => {
                    negate = true;
                    tok = lx.next_tok()?;
                    expect_term = true;
                }
                other => {
                    return Err(Error::Parse(format!("expected '+' or '-', got {other:?}")));
                }
            }
        }
    }
    if expect_term {
        return Err(Error::Parse("dangling sign at end of input".into()));
    }
    Ok(acc)
}

/// term := factor ('*' factor)*
fn parse_term(ring: &PolyRingSpec, lx: &mut Lexer, tok: Tok) -> Result<(Poly, Tok)> {
    let (mut acc, mut tok) = parse_factor(ring, lx, tok)?;
    loop {
        match tok {
            Tok::Star => {
                let next = lx.next_tok()?;
                let (f, rest) = parse_factor(ring, lx, next)?;
                acc = acc.mul(&f)?;
                tok = rest;
            }
            _ => return Ok((acc, tok)),
        }
    }
}

/// factor := INT | VAR ('^' INT)?
fn parse_factor(ring: &PolyRingSpec, lx: &mut Lexer, tok: Tok) -> Result<(Poly, Tok)> {
    match tok {
        Tok::Int(n) => Ok((Poly::from_i64(ring, n), lx.next_tok()?)),
        Tok::Ident(name) => {
            let idx = ring
                .var_index(&name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
            let base = Poly::var(ring, idx)?;
            let next = lx.next_tok()?;
            if next == Tok::Caret {
                match lx.next_tok()? {
                    Tok::Int(e) if e >= 0 => {
                        let e = u32::try_from(e)
                            .map_err(|_| Error::Parse(format!("exponent out of range: {e}")))?;
                        Ok((base.pow(e)?, lx.next_tok()?))
                    }
                    other => Err(Error::Parse(format!("expected exponent, got {other:?}"))),
                }
            } else {
                Ok((base, next))
            }
        }
        other => Err(Error::Parse(format!(
            "expected a coefficient or variable, got {other:?}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::FieldSpec;

    fn ring() -> PolyRingSpec {
        PolyRingSpec::new(FieldSpec::prime(7).unwrap(), &["x", "y"]).unwrap()
    }

    #[test]
    fn parses_spec_syntax() {
        let r = ring();
        let p = parse_poly(&r, "3*x^2*y + 1").unwrap();
        assert_eq!(p.to_string(), "3*x^2*y + 1");
    }

    #[test]
    fn parses_minus_and_unary() {
        let r = ring();
        let p = parse_poly(&r, "-x + y - 3").unwrap();
        let q = parse_poly(&r, "6*x + y + 4").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = ring();
        assert!(matches!(parse_poly(&r, "x + z"), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_garbage() {
        let r = ring();
        assert!(parse_poly(&r, "x +").is_err());
        assert!(parse_poly(&r, "x ^ y").is_err());
        assert!(parse_poly(&r, "(x)").is_err());
    }
}
