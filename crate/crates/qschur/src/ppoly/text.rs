//! Text form of polynomials.
//!
//! Printing: terms in descending order joined by `" + "`, each term a
//! coefficient followed by `*`-separated powers, e.g. `2*x^2*y + x^(1/3^1)`.
//! A unit coefficient is omitted unless the term is constant, an exponent of
//! one is omitted, and fractional exponents print as `(i/q^j)`.
//!
//! Parsing accepts everything the printer emits plus `-`, parentheses and
//! integer powers of parenthesized groups, so user input such as
//! `(x+y)^2 - 2*z` works.

use std::fmt;

use super::exponent::QExponent;
use super::monomial::Monomial;
use super::{Poly, VarSpace};
use crate::error::{Error, Result};
use crate::gf::Field;

const AMBIENT_NAMES: [&str; 6] = ["x", "y", "z", "w", "u", "v"];

/// Printable name of a variable: `x, y, z, w, u, v, a6, a7, ...` in the
/// ambient ring and `X1, X2, ...` in universal rings.
pub fn var_name(space: VarSpace, index: u32) -> String {
    match space {
        VarSpace::Ambient => match AMBIENT_NAMES.get(index as usize) {
            Some(n) => n.to_string(),
            None => format!("a{index}"),
        },
        VarSpace::Universal => format!("X{}", index + 1),
    }
}

/// Inverse of [`var_name`]; `a<k>` is accepted for every `k`.
pub fn parse_var_name(name: &str) -> Option<(VarSpace, u32)> {
    if let Some(i) = AMBIENT_NAMES.iter().position(|n| *n == name) {
        return Some((VarSpace::Ambient, i as u32));
    }
    let digits = |s: &str| -> Option<u32> {
        (!s.is_empty() && s.chars().all(|c| c.is_ascii_digit())).then(|| s.parse().ok()).flatten()
    };
    if let Some(k) = name.strip_prefix('a').and_then(digits) {
        return Some((VarSpace::Ambient, k));
    }
    if let Some(k) = name.strip_prefix('X').and_then(digits) {
        if k >= 1 {
            return Some((VarSpace::Universal, k - 1));
        }
    }
    None
}

fn format_monomial(space: VarSpace, m: &Monomial) -> String {
    let q = m.degree().q();
    let one = QExponent::integer(1, q);
    m.exponents()
        .iter()
        .map(|&(v, e)| {
            let name = var_name(space, v);
            if e == one {
                name
            } else if e.is_integer() {
                format!("{name}^{e}")
            } else {
                format!("{name}^({e})")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let field = self.field();
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = field.format_element(*c);
            if m.is_one() {
                write!(f, "{coef}")?;
            } else if *c == field.one() {
                write!(f, "{}", format_monomial(self.space(), m))?;
            } else {
                write!(f, "{coef}*{}", format_monomial(self.space(), m))?;
            }
        }
        Ok(())
    }
}

/// Parses a polynomial over `field`. Constants and ambient variables give an
/// ambient polynomial; `X<k>` variables give a universal one. Mixing is an error.
pub fn parse_poly(text: &str, field: &Field) -> Result<Poly> {
    let mut p = Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, field, space: None };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let out = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("unexpected '{}' in '{text}'", p.chars[p.pos])));
    }
    Ok(match p.space {
        Some(VarSpace::Universal) => relabel(out, VarSpace::Universal),
        _ => out,
    })
}

/// Parses into an explicitly requested space (constants need no variables to
/// decide).
pub fn parse_poly_in(text: &str, field: &Field, space: VarSpace) -> Result<Poly> {
    let p = parse_poly(text, field)?;
    if p.space() == space {
        return Ok(p);
    }
    if p.var_count() == 0 {
        return Ok(relabel(p, space));
    }
    Err(Error::Parse(format!("'{text}' uses variables from the wrong ring")))
}

fn relabel(p: Poly, space: VarSpace) -> Poly {
    Poly::from_terms(p.field(), space, p.terms().iter().cloned()).expect("relabelling preserves size")
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    field: &'a Field,
    space: Option<VarSpace>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{c}' at position {}", self.pos)))
        }
    }

    fn ambient_zero(&self) -> Poly {
        // Universal input is relabelled at the end, so arithmetic during
        // parsing always happens in the ambient ring.
        Poly::zero(self.field, VarSpace::Ambient)
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = self.ambient_zero();
        let mut negate = self.eat('-');
        loop {
            let t = self.product()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse(format!("number '{s}' out of range")))
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                if self.eat('^') {
                    let e = self.exponent()?;
                    let n = e
                        .as_integer()
                        .ok_or_else(|| Error::Parse("a parenthesized group needs an integer power".into()))?;
                    return inner.pow(n);
                }
                Ok(inner)
            }
            Some('[') => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c != ']') {
                    self.pos += 1;
                }
                self.expect(']')?;
                let s: String = self.chars[start..self.pos].iter().collect();
                let c = self.field.parse_element(&s)?;
                Ok(Poly::constant(self.field, VarSpace::Ambient, c))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                let c = self.field.from_int((n % self.field.p() as u64) as i64);
                Ok(Poly::constant(self.field, VarSpace::Ambient, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let (space, index) = parse_var_name(&name)
                    .ok_or_else(|| Error::Parse(format!("unknown variable '{name}'")))?;
                match self.space {
                    Some(s) if s != space => {
                        return Err(Error::Parse("ambient and universal variables cannot mix".into()))
                    }
                    _ => self.space = Some(space),
                }
                let exp = if self.eat('^') { self.exponent()? } else { QExponent::integer(1, self.field.q()) };
                let m = Monomial::var(index, exp);
                Ok(Poly::monomial(self.field, VarSpace::Ambient, m, self.field.one()))
            }
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    /// `n`, `(i/d)`, `(i/q^j)` or the same inside braces.
    fn exponent(&mut self) -> Result<QExponent> {
        let q = self.field.q();
        let close = if self.eat('(') {
            ')'
        } else if self.eat('{') {
            '}'
        } else {
            return Ok(QExponent::integer(self.number()?, q));
        };
        let num = self.number()?;
        let exp = if self.eat('/') {
            let base = self.number()?;
            let den_pow = if self.eat('^') {
                if base != q as u64 {
                    return Err(Error::Parse(format!("exponent denominator base must be q={q}")));
                }
                self.number()? as u32
            } else {
                let mut d = base;
                let mut k = 0;
                while d > 1 && d % q as u64 == 0 {
                    d /= q as u64;
                    k += 1;
                }
                if d != 1 {
                    return Err(Error::Parse(format!("exponent denominator {base} is not a power of q={q}")));
                }
                k
            };
            QExponent::new(num, den_pow, q)
        } else {
            QExponent::integer(num, q)
        };
        self.expect(close)?;
        Ok(exp)
    }
}
