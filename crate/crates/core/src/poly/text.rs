//! Textual rendering and parsing of polynomials.
//!
//! The format writes terms in decreasing monomial order, e.g.
//! `x[1,1]*x[2,2] - x[1,2]*x[2,1]` or `3/2*x[1,3]^2 + 1`. Coefficients are
//! rationals; `^` raises a variable to a power; `#` starts a comment when
//! parsing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, VarIndex};
use crate::poly::polynomial::Polynomial;

pub fn render(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&m.to_string());
        }
    }
    out
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LBracket,
    RBracket,
    Comma,
    Int(BigInt),
    Slash,
    X,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer {
            chars: s.chars().peekable(),
        }
    }

    fn next_tok(&mut self) -> Result<Option<Tok>> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some(c) if c.is_whitespace() => {
                    self.chars.next();
                }
                Some('#') => {
                    // comment to end of line
                    for c in self.chars.by_ref() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                Some(_) => break,
            }
        }
        let c = self.chars.next().unwrap();
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '/' => Tok::Slash,
            'x' => Tok::X,
            d if d.is_ascii_digit() => {
                let mut s = d.to_string();
                while let Some(c) = self.chars.peek() {
                    if c.is_ascii_digit() {
                        s.push(*c);
                        self.chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Int(s.parse().expect("digit string"))
            }
            other => return Err(Error::PolyFormat(format!("unexpected character '{other}'"))),
        };
        Ok(Some(tok))
    }
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
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

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(found) if found == t => Ok(()),
            found => Err(Error::PolyFormat(format!(
                "expected {t:?}, found {found:?}"
            ))),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            found => Err(Error::PolyFormat(format!(
                "expected integer, found {found:?}"
            ))),
        }
    }

    fn small(&mut self, what: &str) -> Result<u32> {
        let n = self.integer()?;
        u32::try_from(&n).map_err(|_| Error::PolyFormat(format!("{what} {n} out of range")))
    }

    /// factor := 'x' '[' int ',' int ']' ('^' int)?
    fn factor(&mut self) -> Result<(VarIndex, u32)> {
        self.expect(Tok::X)?;
        self.expect(Tok::LBracket)?;
        let row = self.small("row")?;
        self.expect(Tok::Comma)?;
        let col = self.small("column")?;
        self.expect(Tok::RBracket)?;
        if row == 0 || col == 0 {
            return Err(Error::PolyFormat("variable indices are 1-based".into()));
        }
        let exp = if self.peek() == Some(&Tok::Caret) {
            self.next();
            self.small("exponent")?
        } else {
            1
        };
        Ok((VarIndex::cell(row, col), exp))
    }

    /// term := coeff ('*' factor)* | factor ('*' factor)*
    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coeff = BigRational::one();
        let mut pairs: Vec<(VarIndex, u32)> = Vec::new();
        match self.peek() {
            Some(Tok::Int(_)) => {
                let numer = self.integer()?;
                let denom = if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(Error::PolyFormat("zero denominator".into()));
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = BigRational::new(numer, denom);
            }
            Some(Tok::X) => pairs.push(self.factor()?),
            found => {
                return Err(Error::PolyFormat(format!(
                    "expected a term, found {found:?}"
                )))
            }
        }
        while self.peek() == Some(&Tok::Star) {
            self.next();
            pairs.push(self.factor()?);
        }
        Ok((Monomial::from_pairs(pairs), coeff))
    }
}

pub fn parse(s: &str) -> Result<Polynomial> {
    let mut lexer = Lexer::new(s);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    if toks.is_empty() {
        return Err(Error::PolyFormat("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    let mut sign = BigRational::one();
    if p.peek() == Some(&Tok::Minus) {
        p.next();
        sign = -sign;
    } else if p.peek() == Some(&Tok::Plus) {
        p.next();
    }
    loop {
        let (m, c) = p.term()?;
        terms.push((m, c * &sign));
        match p.next() {
            None => break,
            Some(Tok::Plus) => sign = BigRational::one(),
            Some(Tok::Minus) => sign = -BigRational::one(),
            Some(found) => {
                return Err(Error::PolyFormat(format!(
                    "expected '+' or '-', found {found:?}"
                )))
            }
        }
    }
    Ok(Polynomial::from_terms(terms))
}
