use super::poly::Rational;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Polynomial in `x` with coefficients in Q(a), the parse target for scalars and algebra labels.
pub type XPoly = BTreeMap<u32, RatFunc>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    A,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Tok::Int(digits.parse().map_err(|_| Error::Parse(digits.clone()))?));
            }
            'a' | 'α' => out.push(Tok::A),
            'x' => out.push(Tok::X),
            '+' => out.push(Tok::Plus),
            '-' => out.push(Tok::Minus),
            '*' => out.push(Tok::Star),
            '/' => out.push(Tok::Slash),
            '^' => out.push(Tok::Caret),
            '(' => out.push(Tok::LParen),
            ')' => out.push(Tok::RParen),
            other => return Err(Error::Parse(format!("unexpected character {other:?} in {s:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    allow_x: bool,
}

fn constant(c: RatFunc) -> XPoly {
    let mut p = XPoly::new();
    if !c.is_zero() {
        p.insert(0, c);
    }
    p
}

fn add_into(acc: &mut XPoly, k: u32, c: RatFunc) {
    let e = acc.entry(k).or_insert_with(RatFunc::zero);
    *e += &c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

fn xadd(a: &XPoly, b: &XPoly, sign: bool) -> XPoly {
    let mut out = a.clone();
    for (k, c) in b {
        add_into(&mut out, *k, if sign { c.clone() } else { -c });
    }
    out
}

fn xmul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (i, c) in a {
        for (j, d) in b {
            add_into(&mut out, i + j, c * d);
        }
    }
    out
}

fn x_free(a: &XPoly) -> Option<RatFunc> {
    match a.len() {
        0 => Some(RatFunc::zero()),
        1 => a.get(&0).cloned(),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<XPoly> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { xadd(&XPoly::new(), &first, false) } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = xadd(&acc, &t, true);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = xadd(&acc, &t, false);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = xmul(&acc, &f);
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let f = self.power()?;
                    let d = x_free(&f).ok_or_else(|| self.err("division by an expression in x"))?;
                    let inv = constant(d.inv()?);
                    acc = xmul(&acc, &inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<XPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let k: i64 = match self.next() {
            Some(Tok::Int(n)) => n.try_into().map_err(|_| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        let k = if negative { -k } else { k };
        if let Some(c) = x_free(&base) {
            return Ok(constant(c.pow(k)?));
        }
        if k < 0 {
            return Err(self.err("negative power of x"));
        }
        let mut acc = constant(RatFunc::one());
        for _ in 0..k {
            acc = xmul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<XPoly> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(constant(RatFunc::rational(Rational::from_integer(n)))),
            Some(Tok::A) => Ok(constant(RatFunc::alpha())),
            Some(Tok::X) if self.allow_x => {
                let mut p = XPoly::new();
                p.insert(1, RatFunc::one());
                Ok(p)
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

pub fn parse_xpoly(s: &str, allow_x: bool) -> Result<XPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, allow_x };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

pub fn parse_scalar(s: &str) -> Result<RatFunc> {
    let p = parse_xpoly(s, false)?;
    Ok(p.get(&0).cloned().unwrap_or_else(RatFunc::zero))
}
