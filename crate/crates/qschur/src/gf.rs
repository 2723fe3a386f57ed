//! Finite fields `F_q`, `q = p^e`, in a polynomial basis.
//!
//! An element is stored as the integer `c0 + c1 p + ... + c_{e-1} p^{e-1}`
//! built from its coordinates in the basis `1, t, ..., t^{e-1}`. Because the
//! fields involved are tiny (the default ceiling is `q <= 64`), addition,
//! multiplication, negation and inversion are all precomputed into tables at
//! construction time, so a [`Field`] handle is cheap to clone and every
//! operation is a table lookup.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default upper bound on the field size.
pub const DEFAULT_Q_CEILING: u32 = 64;

/// Hard limit imposed by the table representation.
const ABSOLUTE_Q_LIMIT: u32 = 1024;

/// An element of a finite field, meaningful only together with its [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u16);

impl FieldElement {
    /// The integer code `sum c_i p^i` of this element.
    pub fn index(self) -> u32 {
        self.0 as u32
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// A finite field specification together with its operation tables.
///
/// Two handles compare equal when they describe the same `(p, e, modulus)`.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.e.hash(state);
        self.0.modulus.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "q={}", self.0.p)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            write!(f, "q={}^{}:{}", self.0.p, self.0.e, coeffs.join(","))
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Built-in irreducible moduli, coefficients listed from the constant term up.
fn builtin_modulus(p: u32, e: u32) -> Option<Vec<u32>> {
    let m: &[u32] = match (p, e) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (3, 2) => &[1, 0, 1],
        (3, 3) => &[1, 2, 0, 1],
        (5, 2) => &[2, 0, 1],
        _ => return None,
    };
    Some(m.to_vec())
}

/// Remainder of `a` modulo `b` over `F_p`, with `b` monic. Both are low-to-high.
fn poly_rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Irreducibility over `F_p` by trial division with every monic polynomial of
/// degree `1..=deg/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let deg = modulus.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                divisor.push((c % p as u64) as u32);
                c /= p as u64;
            }
            divisor.push(1);
            if poly_rem_mod_p(modulus, &divisor, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, Vec::new())
    }

    /// The field of order `q = p^e` with a built-in modulus when `e > 1`.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or_else(|| {
            Error::InvalidField(format!("{q} is not a prime power"))
        })?;
        if e == 1 {
            return Field::prime(p);
        }
        let modulus = builtin_modulus(p, e).ok_or_else(|| {
            Error::InvalidField(format!("no built-in modulus for q={q}; supply one explicitly"))
        })?;
        Field::new(p, e, modulus)
    }

    /// `F_{p^e}` defined by `modulus` (low-to-high, monic, degree `e`), with
    /// the default ceiling on `q`.
    pub fn new(p: u32, e: u32, modulus: Vec<u32>) -> Result<Field> {
        Field::with_ceiling(p, e, modulus, DEFAULT_Q_CEILING)
    }

    /// Like [`Field::new`] with an explicit ceiling on `q`.
    pub fn with_ceiling(p: u32, e: u32, modulus: Vec<u32>, ceiling: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= ceiling.min(ABSOLUTE_Q_LIMIT))
            .ok_or_else(|| {
                Error::InvalidField(format!("{p}^{e} exceeds the field-size ceiling {ceiling}"))
            })?;
        let modulus = if e == 1 {
            // Any monic linear modulus presents F_p itself.
            if !(modulus.is_empty() || modulus.len() == 2 && modulus[1] % p == 1) {
                return Err(Error::InvalidField("a prime field takes a monic linear modulus or none".into()));
            }
            Vec::new()
        } else {
            if modulus.len() != e as usize + 1 {
                return Err(Error::InvalidField(format!(
                    "modulus needs {} coefficients, got {}",
                    e + 1,
                    modulus.len()
                )));
            }
            let m: Vec<u32> = modulus.iter().map(|c| c % p).collect();
            if m[e as usize] != 1 {
                return Err(Error::InvalidField("modulus must be monic".into()));
            }
            if !is_irreducible(&m, p) {
                return Err(Error::InvalidField(format!(
                    "modulus {:?} is reducible over F_{p}",
                    m
                )));
            }
            m
        };
        Ok(Field(Arc::new(build_tables(p, e, q, modulus))))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, low-to-high; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The image of an integer under `Z -> F_p ⊆ F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u16)
    }

    /// Element with the given coordinates (missing trailing ones are zero).
    pub fn from_coords(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() > self.0.e as usize {
            return Err(Error::Parse(format!(
                "field element has {} coordinates, the field has degree {}",
                coords.len(),
                self.0.e
            )));
        }
        let mut code = 0u32;
        for &c in coords.iter().rev() {
            if c >= self.0.p {
                return Err(Error::Parse(format!("coordinate {c} is not reduced mod {}", self.0.p)));
            }
            code = code * self.0.p + c;
        }
        Ok(FieldElement(code as u16))
    }

    /// Element with integer code `index` (see [`FieldElement::index`]).
    pub fn element(&self, index: u32) -> FieldElement {
        assert!(index < self.0.q, "element index {index} out of range for q={}", self.0.q);
        FieldElement(index as u16)
    }

    /// Coordinates `c0, ..., c_{e-1}` of `a`.
    pub fn coords(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.0.e as usize);
        let mut c = a.0 as u32;
        for _ in 0..self.0.e {
            out.push(c % self.0.p);
            c /= self.0.p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.0.add[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.0.mul[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            None
        } else {
            Some(FieldElement(self.0.inv[a.0 as usize]))
        }
    }

    /// `a^m` with the convention `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, mut m: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            m >>= 1;
        }
        acc
    }

    /// All `q` elements in increasing code order: `0` first, `1` second.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.0.q).map(|i| FieldElement(i as u16)).collect()
    }

    /// Product of all nonzero elements (always `-1`).
    pub fn wilson_product(&self) -> FieldElement {
        self.elements()
            .into_iter()
            .skip(1)
            .fold(self.one(), |acc, a| self.mul(acc, a))
    }

    /// `sum_{a in F} a^i`, with `0^0 = 1`.
    pub fn power_sum(&self, i: u64) -> FieldElement {
        self.elements()
            .into_iter()
            .fold(self.zero(), |acc, a| self.add(acc, self.pow(a, i)))
    }

    /// Textual form of an element: an integer for prime fields, otherwise the
    /// bracketed coordinate list `[c0,c1,...]`.
    pub fn format_element(&self, a: FieldElement) -> String {
        if self.0.e == 1 {
            a.0.to_string()
        } else {
            let parts: Vec<String> = self.coords(a).iter().map(|c| c.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
    }

    /// Inverse of [`Field::format_element`]; integers are accepted in every
    /// field and read modulo `p`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let coords = inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad field coordinate '{c}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            self.from_coords(&coords)
        } else {
            let n: i64 = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad field element '{t}'")))?;
            Ok(self.from_int(n))
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q=p`, `q=p^e` (built-in modulus), `q=p^e:c0,...,ce`, and the
    /// shorthand `q=N` for any order `N` with a built-in modulus.
    fn from_str(s: &str) -> Result<Field> {
        let body = s
            .trim()
            .strip_prefix("q=")
            .ok_or_else(|| Error::Parse(format!("field spec '{s}' must start with 'q='")))?;
        let (order, modulus) = match body.split_once(':') {
            Some((o, m)) => (o, Some(m)),
            None => (body, None),
        };
        let parse_u32 = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad number '{t}' in field spec '{s}'")))
        };
        let (p, e) = match order.split_once('^') {
            Some((p, e)) => (parse_u32(p)?, parse_u32(e)?),
            None => {
                let n = parse_u32(order)?;
                prime_power(n)
                    .ok_or_else(|| Error::InvalidField(format!("{n} is not a prime power")))?
            }
        };
        match modulus {
            Some(m) => {
                let coeffs = m.split(',').map(parse_u32).collect::<Result<Vec<_>>>()?;
                Field::new(p, e, coeffs)
            }
            None if e == 1 => Field::prime(p),
            None => {
                let modulus = builtin_modulus(p, e).ok_or_else(|| {
                    Error::InvalidField(format!("no built-in modulus for {p}^{e}"))
                })?;
                Field::new(p, e, modulus)
            }
        }
    }
}

/// Decomposes `n` as `p^e` with `p` prime.
pub fn prime_power(n: u32) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut e = 0;
    while m.is_multiple_of(p) {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

fn build_tables(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Tables {
    let qs = q as usize;
    let to_coords = |mut c: u32| -> Vec<u32> {
        let mut v = Vec::with_capacity(e as usize);
        for _ in 0..e {
            v.push(c % p);
            c /= p;
        }
        v
    };
    let from_coords = |v: &[u32]| -> u16 { v.iter().rev().fold(0u32, |acc, &c| acc * p + c) as u16 };

    let mut add = vec![0u16; qs * qs];
    let mut mul = vec![0u16; qs * qs];
    for a in 0..q {
        let ca = to_coords(a);
        for b in 0..q {
            let cb = to_coords(b);
            let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
            add[a as usize * qs + b as usize] = from_coords(&sum);

            let mut prod = vec![0u32; 2 * e as usize - 1];
            for (i, x) in ca.iter().enumerate() {
                for (j, y) in cb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let reduced = if e == 1 { prod } else { poly_rem_mod_p(&prod, &modulus, p) };
            let mut padded = reduced;
            padded.resize(e as usize, 0);
            mul[a as usize * qs + b as usize] = from_coords(&padded);
        }
    }
    let mut neg = vec![0u16; qs];
    let mut inv = vec![0u16; qs];
    for a in 0..qs {
        neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u16;
        if a != 0 {
            inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u16;
        }
    }
    Tables { p, e, q, modulus, add, mul, neg, inv }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fields() -> Vec<Field> {
        [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]
            .iter()
            .map(|&q| Field::of_order(q).unwrap())
            .collect()
    }

    #[test]
    fn prime_field_listing() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(f2.elements().iter().map(|a| a.index()).collect::<Vec<_>>(), vec![0, 1]);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.elements().iter().map(|a| a.index()).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn enumeration_starts_with_zero_and_one() {
        for f in all_fields() {
            let els = f.elements();
            assert_eq!(els.len() as u32, f.q());
            assert_eq!(els[0], f.zero());
            assert_eq!(els[1], f.one());
        }
    }

    #[test]
    fn f4_is_closed_and_a_field() {
        let f: Field = "q=2^2:1,1,1".parse().unwrap();
        let els = f.elements();
        for &a in &els {
            for &b in &els {
                assert!(els.contains(&f.add(a, b)));
                assert!(els.contains(&f.mul(a, b)));
            }
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
        // t * t = t + 1 for the modulus t^2 + t + 1.
        let t = f.from_coords(&[0, 1]).unwrap();
        assert_eq!(f.mul(t, t), f.from_coords(&[1, 1]).unwrap());
    }

    #[test]
    fn wilson_products() {
        assert_eq!(Field::prime(3).unwrap().wilson_product().index(), 2);
        assert_eq!(Field::prime(2).unwrap().wilson_product().index(), 1);
        assert_eq!(Field::prime(5).unwrap().wilson_product().index(), 4);
        for f in all_fields() {
            assert_eq!(f.wilson_product(), f.neg(f.one()));
        }
    }

    #[test]
    fn power_sums() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.power_sum(1).index(), 0);
        assert_eq!(f3.power_sum(2).index(), 2);
        assert_eq!(Field::prime(2).unwrap().power_sum(0).index(), 0);
        for f in all_fields() {
            for i in 0..(f.q() as u64 - 1) {
                assert!(f.power_sum(i).is_zero(), "{f} i={i}");
            }
        }
    }

    #[test]
    fn frobenius_fixed_points_and_freshman() {
        for f in all_fields() {
            for a in f.elements() {
                assert_eq!(f.pow(a, f.q() as u64), a);
                for b in f.elements() {
                    let lhs = f.pow(f.add(a, b), f.p() as u64);
                    let rhs = f.add(f.pow(a, f.p() as u64), f.pow(b, f.p() as u64));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!("q=3".parse::<Field>().unwrap().q(), 3);
        assert_eq!("q=9".parse::<Field>().unwrap().q(), 9);
        assert_eq!("q=2^3".parse::<Field>().unwrap().modulus(), &[1, 1, 0, 1]);
        assert!(matches!("q=6".parse::<Field>(), Err(Error::InvalidField(_))));
        // t^2 + 1 = (t + 1)^2 over F_2.
        assert!(matches!("q=2^2:1,0,1".parse::<Field>(), Err(Error::InvalidField(_))));
        assert!(matches!("q=128".parse::<Field>(), Err(Error::InvalidField(_))));
        assert!(matches!("p=2".parse::<Field>(), Err(Error::Parse(_))));
        let f: Field = "q=2^2:1,1,1".parse().unwrap();
        assert_eq!(f.to_string(), "q=2^2:1,1,1");
        assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
    }

    #[test]
    fn element_text_round_trip() {
        for f in all_fields() {
            for a in f.elements() {
                assert_eq!(f.parse_element(&f.format_element(a)).unwrap(), a);
            }
        }
    }
}
