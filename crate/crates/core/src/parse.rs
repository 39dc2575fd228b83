//! Polynomial text syntax: `2*X1*X3 + X2*X3`, `x^2 - y^3`, `1/2 x y`.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*'? factor)*
//! factor := INT ('/' INT)? | IDENT ('^' INT)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Slash,
    Caret,
    Star,
    Plus,
    Minus,
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { chars: src.char_indices().collect(), pos: 0, src }
    }

    fn tokens(mut self) -> std::result::Result<Vec<(usize, Tok)>, (usize, String)> {
        let mut out = Vec::new();
        while self.pos < self.chars.len() {
            let (at, c) = self.chars[self.pos];
            let col = self.src[..at].chars().count();
            match c {
                c if c.is_whitespace() => self.pos += 1,
                '0'..='9' => {
                    let s = self.take_while(|c| c.is_ascii_digit());
                    out.push((col, Tok::Int(s)));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let s = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                    out.push((col, Tok::Ident(s)));
                }
                '/' | '^' | '*' | '+' | '-' => {
                    self.pos += 1;
                    out.push((
                        col,
                        match c {
                            '/' => Tok::Slash,
                            '^' => Tok::Caret,
                            '*' => Tok::Star,
                            '+' => Tok::Plus,
                            _ => Tok::Minus,
                        },
                    ));
                }
                other => return Err((col, format!("unexpected character `{other}`"))),
            }
        }
        Ok(out)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while self.pos < self.chars.len() && pred(self.chars[self.pos].1) {
            s.push(self.chars[self.pos].1);
            self.pos += 1;
        }
        s
    }
}

/// Parses a polynomial; errors report line 1 and a 1-based column.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<Poly> {
    parse_poly_at(ring, text, 1, 1)
}

/// Parses with error positions offset to where `text` sits in a larger file.
pub fn parse_poly_at(ring: &PolyRing, text: &str, line: usize, col0: usize) -> Result<Poly> {
    let err = |col: usize, msg: String| Error::Parse { line, col: col0 + col, msg };
    let toks = Lexer::new(text).tokens().map_err(|(c, m)| err(c, m))?;
    let end = text.chars().count();
    let mut p = Parser { toks: &toks, pos: 0 };
    let mut acc = ring.zero();
    if toks.is_empty() {
        return Err(err(0, "empty polynomial".into()));
    }
    let mut first = true;
    loop {
        let sign = match p.peek() {
            Some(Tok::Plus) => {
                p.pos += 1;
                1
            }
            Some(Tok::Minus) => {
                p.pos += 1;
                -1
            }
            Some(_) if first => 1,
            Some(t) => return Err(err(p.col(end), format!("expected `+` or `-`, found {t:?}"))),
            None => break,
        };
        first = false;
        let (coef, mono) = p.term(ring).map_err(|(c, m)| err(c.unwrap_or(end), m))?;
        let coef = if sign < 0 { -coef } else { coef };
        let c = ring.field.from_rat(&coef).map_err(|e| err(0, e.to_string()))?;
        acc = acc.try_add(&ring.term(c, mono))?;
        if p.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

struct Parser<'t> {
    toks: &'t [(usize, Tok)],
    pos: usize,
}

type PErr = (Option<usize>, String);

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self, end: usize) -> usize {
        self.toks.get(self.pos).map(|(c, _)| *c).unwrap_or(end)
    }

    fn here(&self) -> Option<usize> {
        self.toks.get(self.pos).map(|(c, _)| *c)
    }

    fn term(&mut self, ring: &PolyRing) -> std::result::Result<(Rat, Monomial), PErr> {
        let mut coef = Rat::one();
        let mut mono = Monomial::one(ring.nvars());
        let mut nfactors = 0;
        loop {
            match self.peek() {
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) => {}
                Some(Tok::Star) if nfactors > 0 => {
                    self.pos += 1;
                    if !matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_))) {
                        return Err((self.here(), "expected a factor after `*`".into()));
                    }
                    continue;
                }
                _ if nfactors == 0 => return Err((self.here(), "expected a coefficient or variable".into())),
                _ => break,
            }
            nfactors += 1;
            match self.toks[self.pos].1.clone() {
                Tok::Int(n) => {
                    self.pos += 1;
                    let num: BigInt = n.parse().unwrap();
                    let mut den = BigInt::from(1);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.peek() {
                            Some(Tok::Int(d)) => {
                                den = d.parse().unwrap();
                                if den == BigInt::from(0) {
                                    return Err((self.here(), "zero denominator".into()));
                                }
                                self.pos += 1;
                            }
                            _ => return Err((self.here(), "expected a denominator after `/`".into())),
                        }
                    }
                    coef = &coef * &Rat::from_big(BigRational::new(num, den));
                }
                Tok::Ident(name) => {
                    let at = self.here();
                    self.pos += 1;
                    let i = ring.var_index(&name).ok_or((at, format!("unknown variable `{name}`")))?;
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.peek() {
                            Some(Tok::Int(d)) => {
                                e = d.parse().map_err(|_| (self.here(), "exponent too large".to_string()))?;
                                self.pos += 1;
                            }
                            _ => return Err((self.here(), "expected an exponent after `^`".into())),
                        }
                    }
                    mono.0[i] += e;
                }
                _ => unreachable!(),
            }
        }
        Ok((coef, mono))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "X1", "X2", "X3"], FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn accepts_the_documented_forms() {
        let r = ring();
        let p = parse_poly(&r, "2*X1*X3 + X2*X3").unwrap();
        assert_eq!(p.num_terms(), 2);
        let q = parse_poly(&r, "x^2 - y^3").unwrap();
        assert_eq!(q.total_degree(), Some(3));
        let h = parse_poly(&r, "1/2 x y").unwrap();
        assert_eq!(h, parse_poly(&r, "1/2*x*y").unwrap());
        assert_eq!(parse_poly(&r, "-x + x").unwrap(), r.zero());
        assert_eq!(parse_poly(&r, "x x").unwrap(), parse_poly(&r, "x^2").unwrap());
    }

    #[test]
    fn reports_columns() {
        let r = ring();
        match parse_poly(&r, "x + q") {
            Err(Error::Parse { line: 1, col: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_poly_at(&r, "x ^", 4, 10) {
            Err(Error::Parse { line: 4, col, .. }) => assert_eq!(col, 13),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly(&r, "x + ").is_err());
        assert!(parse_poly(&r, "x $ y").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
        assert!(parse_poly(&r, "").is_err());
    }
}
